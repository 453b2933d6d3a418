# semiloc/data/__init__.py
