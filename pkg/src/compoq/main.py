"""Entry point для запуска CLI."""

import sys

from compoq.adapters.cli.app import run


def main() -> None:
    """Запустить CLI и завершиться с его кодом выхода."""
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
