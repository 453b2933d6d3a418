# semiloc/__main__.py
from semiloc.main import main

main()
