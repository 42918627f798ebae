import sys

from baerinv.cli import main

sys.exit(main())
