"""
Programmatic front end to the ``polyforge`` management command.

``run`` returns the process exit code instead of exiting: 0 on success,
1 on a domain failure, 2 on a usage error.
"""
import os
import sys


def run(argv, stdout=None, stderr=None) -> int:
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "polyforge.settings")
    import django

    django.setup()

    from polytopes.management.commands.polyforge import Command

    command = Command(stdout=stdout or sys.stdout, stderr=stderr or sys.stderr)
    saved_streams = sys.stdout, sys.stderr
    if stdout is not None:
        sys.stdout = stdout
    if stderr is not None:
        sys.stderr = stderr
    try:
        command.run_from_argv(["manage.py", "polyforge", *argv])
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 1
    finally:
        sys.stdout, sys.stderr = saved_streams
    return 0


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
