import logging

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from rest_framework.renderers import JSONRenderer

from .exceptions import DomainError
from .responses import EXIT_OK, CommandResponse

logger = logging.getLogger(__name__)


class ReportCommand(BaseCommand):
    """
    Base class for srgforge commands.
    Subclasses implement ``run()`` and return a CommandResult; this class renders
    it as JSON on stdout and turns the exit-code contract into CommandError.
    """
    requires_system_checks = []
    requires_migrations_checks = False

    def run(self, **options):
        raise NotImplementedError('subclasses of ReportCommand must provide a run() method')

    def render(self, payload):
        document = {'schema': settings.SRGFORGE['SCHEMA_VERSION']}
        document.update(payload)
        content = JSONRenderer().render(document, renderer_context={'indent': settings.SRGFORGE['JSON_INDENT']})
        return content.decode('utf-8')

    def handle(self, *args, **options):
        try:
            result = self.run(**options)
        except DomainError as error:
            result = CommandResponse.failure(error)
        except (OSError, UnicodeDecodeError) as error:
            result = CommandResponse.bad_request(str(error))

        if result.text is not None:
            self.stdout.write(result.text, ending='')
        elif result.payload is not None:
            self.stdout.write(self.render(result.payload))
        if result.exit_code != EXIT_OK:
            payload = result.payload or {}
            detail = payload.get('error', {}).get('detail') or payload.get('detail') or 'check failed'
            logger.info('%s exited with %d', self.__module__.rsplit('.', 1)[-1], result.exit_code)
            raise CommandError(str(detail), returncode=result.exit_code)
