import sys

from permpoly.cli import main

sys.exit(main())
