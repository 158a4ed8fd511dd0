import matplotlib.pyplot as plt
from matplotlib.patches import Rectangle
from symdiet.composition import Composition
from symdiet.composition import interval_blocks
from symdiet.composition import translations

BLOCK_HEIGHT = 0.4
ROW_GAP = 1.2  # vertical distance between the domain and image rows
COLORS = plt.rcParams["axes.prop_cycle"].by_key()["color"]
DEFAULT_ANNO_KWARGS = {
    "annotation_clip": False,
    "color": "#202020",
    "ha": "center",
    "va": "center",
    "fontsize": 9,
}
DEFAULT_ARROW_KWARGS = {"arrowstyle": "->", "color": "#606060", "lw": 0.8}


def _add_block(ax, lo, hi, y, label, color):
    ax.add_patch(
        Rectangle(
            (lo - 0.5, y - BLOCK_HEIGHT / 2),
            hi - lo + 1,
            BLOCK_HEIGHT,
            facecolor=color,
            edgecolor="k",
            alpha=0.6,
        )
    )
    ax.annotate(label, ((lo + hi) / 2, y), **DEFAULT_ANNO_KWARGS)


def plot_diet(c: Composition, ax: plt.Axes = None) -> plt.Axes:
    """Draw the block diagram of the symmetric discrete interval exchange of c. The
    blocks of [1, n] are drawn on the top row, their images on the bottom row, and an
    arrow joins every block to its image.

    Args:
        Composition c: The composition.
        ax: A matplotlib Axes. Default is None, a new figure is created.

    Returns:
        The matplotlib Axes.

    Example:
        >>> import matplotlib
        >>> matplotlib.use("Agg")
        >>> from symdiet.composition import make_composition
        >>> ax = plot_diet(make_composition((3, 5, 4, 2)))
        >>> len(ax.patches)
        8
    """
    if ax is None:
        _, ax = plt.subplots(figsize=(max(4, c.n * 0.4), 2.5))

    top, bottom = ROW_GAP, 0
    for block, shift in zip(interval_blocks(c), translations(c.parts)):
        color = COLORS[(block.index - 1) % len(COLORS)]
        label = f"$B_{{{block.index}}}$"
        _add_block(ax, block.lo, block.hi, top, label, color)
        _add_block(ax, block.lo + shift, block.hi + shift, bottom, label, color)
        center = (block.lo + block.hi) / 2
        ax.annotate(
            "",
            xy=(center + shift, bottom + BLOCK_HEIGHT / 2),
            xytext=(center, top - BLOCK_HEIGHT / 2),
            arrowprops=DEFAULT_ARROW_KWARGS,
        )

    ax.set_xlim(0.5, c.n + 0.5)
    ax.set_ylim(bottom - BLOCK_HEIGHT, top + BLOCK_HEIGHT)
    ax.set_xticks(range(1, c.n + 1))
    ax.set_yticks([])
    ax.set_title(f"T({c})")
    return ax
