import sys

from laasim.cli import main

sys.exit(main())
