import json
import logging
import sys
from functools import wraps

import click

from utils.errors import (
    GraphError,
    InstanceError,
    InstanceParseError,
    OracleDisagreement,
    RejectionBudgetExceeded,
    ValidationSkipped,
)

logger = logging.getLogger(__name__)

EXIT_ADMISSIBLE = 0
EXIT_OK = 0
EXIT_NOT_ADMISSIBLE = 1
EXIT_REGRESSION = 1
EXIT_INPUT_ERROR = 2
EXIT_ORACLE_DISAGREEMENT = 3
EXIT_INTERNAL_ERROR = 4

INPUT_ERRORS = (InstanceParseError, InstanceError, GraphError, ValidationSkipped,
                RejectionBudgetExceeded, ValueError, OSError)


def exit_on_error(f):
    """
    Decorator for command handlers that return an exit status.
    Input errors exit 2, an oracle disagreement exits 3 and a failed internal
    check exits 4, each with a one-line diagnostic on stderr (or a JSON
    object when --json is set). Exit 1 stays reserved for a negative answer.
    """
    @wraps(f)
    def decorated_function(*args, **kwargs):
        json_output = kwargs.get('json_output', False)
        try:
            status = f(*args, **kwargs)
        except OracleDisagreement as e:
            logger.error(f"Oracle disagreement: {e}")
            _report_error(str(e), 'ORACLE_DISAGREEMENT', json_output)
            sys.exit(EXIT_ORACLE_DISAGREEMENT)
        except INPUT_ERRORS as e:
            _report_error(str(e), 'INPUT_ERROR', json_output)
            sys.exit(EXIT_INPUT_ERROR)
        except Exception as e:
            # failed certificate or precondition checks land here too
            logger.exception(f"Internal error: {e}")
            _report_error(f"internal error: {e}", 'INTERNAL_ERROR', json_output)
            sys.exit(EXIT_INTERNAL_ERROR)
        sys.exit(status or 0)

    return decorated_function


def _report_error(message, error_code, json_output):
    if json_output:
        click.echo(json.dumps({'success': False, 'message': message, 'error_code': error_code}))
    else:
        click.echo(f"error: {message}", err=True)
