import sys

from raagcoh.cli import main

sys.exit(main())
