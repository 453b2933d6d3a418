# semiloc/cli/commands/__init__.py
