import sys

from sns2.cli.app import main as run


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
