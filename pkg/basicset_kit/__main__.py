import sys

from basicset_kit.cli import main

sys.exit(main())
