import sys

from symprod.cli import main

sys.exit(main())
