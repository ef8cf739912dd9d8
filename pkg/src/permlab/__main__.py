import sys

from permlab.cli import main

sys.exit(main())
