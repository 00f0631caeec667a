import sys

from fibsnow.cli import main

if __name__ == "__main__":
    sys.exit(main())
