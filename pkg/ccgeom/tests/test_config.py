import os
import threading
import unittest

from ccgeom import constants
from ccgeom.config import Settings, get_settings, override_settings
from ccgeom.decorators import validate, Parameter, EnvironmentVariableParameter
from ccgeom.decorators.fn_deco_validate.validators import Min
from ccgeom.env_var_logic import disable_validation, enable_validation, is_validation_enabled
from ccgeom.exceptions import OutOfRange


class TestSettings(unittest.TestCase):
    def setUp(self) -> None:
        for name in ['CCGEOM_SYMMETRY_TOLERANCE', 'CCGEOM_RESAMPLE_LIMIT']:
            os.environ.pop(name, None)

    def tearDown(self) -> None:
        self.setUp()

    def test_defaults(self):
        settings = Settings()

        self.assertEqual(constants.SYMMETRY_TOLERANCE, settings.symmetry_tolerance)
        self.assertEqual(100, settings.resample_limit)
        self.assertEqual(64, settings.max_constraints)

    def test_from_environment(self):
        os.environ['CCGEOM_SYMMETRY_TOLERANCE'] = '1e-4'
        os.environ['CCGEOM_RESAMPLE_LIMIT'] = ' 7 '
        settings = Settings.from_environment()

        self.assertEqual(1e-4, settings.symmetry_tolerance)
        self.assertEqual(7, settings.resample_limit)
        self.assertEqual(constants.CHAIN_CLOSURE, settings.chain_closure)

    def test_from_environment_rejects_non_positive(self):
        os.environ['CCGEOM_RESAMPLE_LIMIT'] = '0'

        with self.assertRaises(expected_exception=OutOfRange):
            Settings.from_environment()

    def test_override_is_temporary(self):
        before = get_settings()

        with override_settings(resample_limit=3) as settings:
            self.assertEqual(3, settings.resample_limit)
            self.assertEqual(3, get_settings().resample_limit)

        self.assertEqual(before, get_settings())

    def test_override_restores_after_exception(self):
        before = get_settings()

        with self.assertRaises(expected_exception=RuntimeError):
            with override_settings(default_clip=2.0):
                raise RuntimeError('boom')

        self.assertEqual(before.default_clip, get_settings().default_clip)

    def test_override_stays_in_its_thread(self):
        seen = []

        with override_settings(resample_limit=3):
            worker = threading.Thread(target=lambda: seen.append(get_settings().resample_limit))
            worker.start()
            worker.join()

            self.assertEqual(3, get_settings().resample_limit)

        self.assertEqual([constants.RESAMPLE_LIMIT], seen)

    def test_nested_overrides(self):
        with override_settings(resample_limit=3):
            with override_settings(default_clip=2.0) as inner:
                self.assertEqual((3, 2.0), (inner.resample_limit, inner.default_clip))

            self.assertEqual(constants.DEFAULT_CLIP, get_settings().default_clip)

    def test_to_dict(self):
        data = Settings().to_dict()

        self.assertEqual(constants.MEMBERSHIP_MARGIN, data['membership_margin'])
        self.assertIn('oracle_grid', data)


class TestEnvironmentVariables(unittest.TestCase):
    def setUp(self) -> None:
        enable_validation()
        os.environ.pop('CCGEOM_TEST_TRIALS', None)

    def tearDown(self) -> None:
        enable_validation()
        os.environ.pop('CCGEOM_TEST_TRIALS', None)

    def test_validation_enabled(self):
        @validate(Parameter(name='trials', validators=[Min(1)]))
        def run(trials: int) -> int:
            return trials

        with self.assertRaises(expected_exception=OutOfRange):
            run(0)

    def test_validation_disabled(self):
        disable_validation()

        @validate(Parameter(name='trials', validators=[Min(1)]))
        def run(trials: int) -> int:
            return trials

        self.assertEqual(0, run(0))

    def test_enable_disable(self):
        enable_validation()
        self.assertTrue(is_validation_enabled())
        disable_validation()
        self.assertFalse(is_validation_enabled())
        enable_validation()
        self.assertTrue(is_validation_enabled())

    def test_environment_variable_parameter(self):
        @validate(EnvironmentVariableParameter(name='trials', env_var_name='CCGEOM_TEST_TRIALS', value_type=int,
                                               validators=[Min(1)]))
        def run(trials: int = 10) -> int:
            return trials

        self.assertEqual(10, run())
        os.environ['CCGEOM_TEST_TRIALS'] = '42'
        self.assertEqual(42, run())
        self.assertEqual(5, run(5))
        os.environ['CCGEOM_TEST_TRIALS'] = '0'

        with self.assertRaises(expected_exception=OutOfRange):
            run()
