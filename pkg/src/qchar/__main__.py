import sys

from qchar.cli import main

sys.exit(main())
