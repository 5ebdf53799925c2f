#
# (c) Copyright 2026 by the pitwo developers.
#
# So "python -m pitwo ..." works like the installed command.
#
from .cli import main

main()

# EOF
