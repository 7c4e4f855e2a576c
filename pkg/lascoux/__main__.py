"""Allow ``python -m lascoux``."""

from lascoux.cli import main

if __name__ == "__main__":
    main()
