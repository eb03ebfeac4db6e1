import argparse

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError

from fermat.cache import PointCountCache
from fermat.exceptions import DomainError, VerificationError
from fermat.serializers import render_json


def add_global_options(parser):
    """--json and --cache, shared by every command and every sub-action."""
    parser.add_argument('--json', action='store_true', dest='as_json', help='Print JSON instead of text.')
    parser.add_argument(
        '--cache', dest='cache_path', metavar='PATH',
        help='Point-count cache file (default: FERMATCHECK_POINT_CACHE).',
    )
    return parser


def global_options():
    return add_global_options(argparse.ArgumentParser(add_help=False))


class FermatCommand(BaseCommand):
    """
    Base for the verification commands.

    Subclasses implement ``add_command_arguments`` and ``run``. Commands with
    sub-actions call ``add_actions`` so that the global options are accepted
    after the action name. Verification failures exit 1, domain errors exit 2.
    """

    has_actions = False

    def add_arguments(self, parser):
        if not self.has_actions:
            add_global_options(parser)
        self.add_command_arguments(parser)

    def add_command_arguments(self, parser):
        pass

    def add_actions(self, parser):
        subparsers = parser.add_subparsers(dest='action', required=True, metavar='ACTION')

        def add(name, **kwargs):
            return subparsers.add_parser(name, parents=[global_options()], **kwargs)
        return add

    def handle(self, *args, **options):
        self.as_json = options.get('as_json', False)
        self.cache = PointCountCache.from_settings(options.get('cache_path'))
        try:
            self.run(*args, **options)
        except VerificationError as exc:
            raise CommandError(f"verification failed: {exc}", returncode=1) from exc
        except DomainError as exc:
            raise CommandError(str(exc), returncode=2) from exc
        finally:
            if self.cache is not None:
                self.cache.save()

    def run(self, *args, **options):
        raise NotImplementedError('subclasses of FermatCommand must provide a run() method')

    @property
    def workers_default(self):
        return settings.FERMATCHECK_WORKERS

    @property
    def max_field_size(self):
        return settings.FERMATCHECK_MAX_FIELD_SIZE

    def emit_json(self, data):
        self.stdout.write(render_json(data))

    def success(self, message):
        self.stdout.write(self.style.SUCCESS(message))

    def usage_error(self, message):
        raise CommandError(message, returncode=2)
