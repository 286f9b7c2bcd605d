# app.py
import sys

from application.classification_cli import cli


def create_cli():
    """CLI factory; logging is configured by the group callback on each run."""
    return cli


def main(argv=None):
    return create_cli().main(args=argv, prog_name="liealg", obj={})


if __name__ == "__main__":
    sys.exit(main())
