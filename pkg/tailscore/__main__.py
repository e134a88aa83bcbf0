import sys
from tailscore.cli import main

sys.exit(main())
