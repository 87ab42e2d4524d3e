import sys

from impactplot.cli import main

sys.exit(main())
