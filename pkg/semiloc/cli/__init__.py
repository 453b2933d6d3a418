# semiloc/cli/__init__.py
