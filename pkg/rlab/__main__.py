"""Enable execution with python -m rlab."""

from rlab.cli import main

if __name__ == "__main__":
    main()
