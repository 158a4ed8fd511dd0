import matplotlib.pyplot as plt
from symdiet.composition import make_composition
from symdiet.permutation.plot import plot_diet


def test_plot_diet():
    c = make_composition((3, 5, 4, 2))
    ax = plot_diet(c)
    # two rectangles per block, one on each row
    assert len(ax.patches) == 2 * c.r
    assert ax.get_title() == "T(3,5,4,2)"
    assert ax.get_xlim() == (0.5, 14.5)
    assert list(ax.get_xticks()) == list(range(1, 15))
    plt.close("all")


def test_plot_diet_on_existing_axes():
    _, ax = plt.subplots()
    out = plot_diet(make_composition((1, 1)), ax=ax)
    assert out is ax
    assert len(ax.patches) == 4
    # the image of the first block is drawn over the second block
    bottom = [patch for patch in ax.patches if patch.get_y() < 0.5]
    assert sorted(patch.get_x() for patch in bottom) == [0.5, 1.5]
    plt.close("all")
