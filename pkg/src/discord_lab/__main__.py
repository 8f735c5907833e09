import sys

from discord_lab.cli import main

sys.exit(main())
