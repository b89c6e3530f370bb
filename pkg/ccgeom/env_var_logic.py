import os

ENVIRONMENT_VARIABLE_NAME = 'CCGEOM_VALIDATE'


def enable_validation() -> None:
    os.environ[ENVIRONMENT_VARIABLE_NAME] = '1'


def disable_validation() -> None:
    os.environ[ENVIRONMENT_VARIABLE_NAME] = '0'


def is_validation_enabled() -> bool:
    if ENVIRONMENT_VARIABLE_NAME not in os.environ:
        return True

    return os.environ[ENVIRONMENT_VARIABLE_NAME] == '1'
