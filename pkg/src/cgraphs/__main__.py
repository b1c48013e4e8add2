import sys

from cgraphs.cli import main

sys.exit(main())
