import sys

from irssim.cli import main

sys.exit(main())
