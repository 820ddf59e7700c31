import sys

from binomverify.cli import main

sys.exit(main())
