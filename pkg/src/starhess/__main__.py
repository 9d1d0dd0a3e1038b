import sys

from starhess.cli import main

sys.exit(main())
