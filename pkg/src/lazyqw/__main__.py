import sys

from lazyqw.cli import main

sys.exit(main())
