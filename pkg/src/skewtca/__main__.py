import sys

from skewtca.cli import main

sys.exit(main())
