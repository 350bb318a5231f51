import sys

from coop_safety.cli import main

sys.exit(main())
