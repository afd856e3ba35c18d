__all__ = [
    'load',
    'dump',
]

# Plain python data in and out (dicts, lists, str, int, float, None).
# Coefficient lists are written inline, so a triple reads like its display.

try:
    from ruamel.yaml import YAML

    def _yaml():
        yaml = YAML(typ='safe', pure=True)
        yaml.default_flow_style = None
        return yaml

    def load(stream):
        return _yaml().load(stream)

    def dump(obj, stream):
        _yaml().dump(obj, stream)

except ImportError:
    try:
        import yaml as _pyyaml
        try:
            from yaml import CSafeLoader as _Loader, CSafeDumper as _Dumper
        except ImportError:
            from yaml import SafeLoader as _Loader, SafeDumper as _Dumper
    except ImportError:
        raise ImportError('could not find ruamel.yaml or PyYAML')

    def load(stream):
        return _pyyaml.load(stream, Loader=_Loader)

    def dump(obj, stream):
        _pyyaml.dump(obj, stream, Dumper=_Dumper, default_flow_style=None)
