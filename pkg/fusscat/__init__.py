def register_suite(suite_cls):
    from fusscat.registry import REGISTRY

    REGISTRY.register_suite(suite_cls)
