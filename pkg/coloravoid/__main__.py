import sys

from coloravoid.cli import main

sys.exit(main())
