import sys

from lcdhull.cli import main

sys.exit(main())
