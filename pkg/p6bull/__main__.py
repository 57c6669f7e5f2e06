import sys

from p6bull.cli import main

sys.exit(main())
