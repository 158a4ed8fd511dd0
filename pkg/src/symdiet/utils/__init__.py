import json


def dumps(obj) -> str:
    """Serialize a JSON compliant python object to compact text, with a trailing
    newline. Parsing and serializing the text again reproduces it exactly.

    Example:
        >>> dumps({"composition": [1, 1], "depth": 0})
        '{"composition":[1,1],"depth":0}\\n'
    """
    text = json.dumps(obj, ensure_ascii=False, allow_nan=False, separators=(",", ":"))
    return text + "\n"


def flatten_dict(obj, previous_key=None):
    """Flatten a nested dictionary with keys as obj1.obj2... and so on

    Example:
        >>> flatten_dict({"parent": {"kind": "Type1", "t": 2}, "depth": 3})
        {'parent.kind': 'Type1', 'parent.t': 2, 'depth': 3}
    """
    result = {}
    for k, v in obj.items():
        key = f"{previous_key}.{k}" if previous_key is not None else k
        if not isinstance(v, dict):
            result.update({key: v})
        else:
            result.update(**flatten_dict(v, previous_key=key))

    return result
