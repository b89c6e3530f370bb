import logging
import unittest

import numpy as np

from ccgeom.config import override_settings
from ccgeom.decorators import frozen_dataclass, retry, retry_func, timer, validate, Parameter
from ccgeom.decorators.fn_deco_validate.validators import Composite, ForEach, IsEnum, IsFinite, Max, Min, NotEmpty
from ccgeom.exceptions import CaseNotRealized, OutOfRange, TooManyArguments, ValidateException, ValidatorException
from ccgeom.space_kernel import Space


@frozen_dataclass
class Sample:
    v: np.ndarray
    label: str = ''


class TestRetry(unittest.TestCase):
    def test_retry_positive_no_args(self):
        count = 0

        @retry(attempts=5)
        def foo():
            nonlocal count
            count += 1

        foo()
        assert count == 1

    def test_retry_fails_every_time(self):
        count = 0

        @retry(attempts=5, exceptions=CaseNotRealized)
        def foo():
            nonlocal count
            count += 1
            raise CaseNotRealized('missed', attempts=count)

        with self.assertRaises(expected_exception=CaseNotRealized):
            foo()

        assert count == 5

    def test_retry_other_exception_is_not_retried(self):
        count = 0

        @retry(attempts=5, exceptions=CaseNotRealized)
        def foo():
            nonlocal count
            count += 1
            raise ValueError('foo')

        with self.assertRaises(expected_exception=ValueError):
            foo()

        assert count == 1

    def test_retry_succeeds_after_failures(self):
        count = 0

        @retry(attempts=5)
        def foo() -> int:
            nonlocal count
            count += 1

            if count < 3:
                raise ValueError('foo')

            return count

        self.assertEqual(3, foo())

    def test_retry_logs_every_failed_attempt(self):
        logger = logging.getLogger('ccgeom.tests.retry')
        draws = iter([0.1, 0.2, 0.9])

        def draw() -> float:
            x = next(draws)

            if x < 0.5:
                raise CaseNotRealized(f'{x} too small', attempts=1)

            return x

        with self.assertLogs(logger, level='WARNING') as logs:
            self.assertEqual(0.9, retry_func(draw, attempts=3, exceptions=CaseNotRealized, logger=logger))

        self.assertEqual(2, len(logs.output))

    def test_retry_func_defaults_to_resample_limit(self):
        count = 0

        def foo():
            nonlocal count
            count += 1
            raise CaseNotRealized('missed', attempts=count)

        with override_settings(resample_limit=4):
            with self.assertRaises(expected_exception=CaseNotRealized):
                retry_func(foo, exceptions=CaseNotRealized)

        assert count == 4


class TestTimer(unittest.TestCase):
    def test_timer_logs_at_info(self):
        @timer
        def calculation() -> int:
            return 42

        with self.assertLogs('ccgeom.decorators.fn_deco_timer', level='INFO') as logs:
            self.assertEqual(42, calculation())

        self.assertIn('calculation', logs.output[0])


class TestFrozenDataclass(unittest.TestCase):
    def test_arrays_are_read_only_copies(self):
        data = np.array([1.0, 2.0])
        sample = Sample(v=data)
        data[0] = 5.0

        self.assertEqual(1.0, sample.v[0])

        with self.assertRaises(expected_exception=ValueError):
            sample.v[0] = 3.0

    def test_frozen(self):
        sample = Sample(v=[1.0, 2.0])

        with self.assertRaises(expected_exception=AttributeError):
            sample.label = 'b'

    def test_array_aware_equality_and_hash(self):
        a, b = Sample(v=[0.0, 1.0], label='a'), Sample(v=np.array([-0.0, 1.0]), label='a')

        self.assertEqual(a, b)
        self.assertEqual(hash(a), hash(b))
        self.assertNotEqual(a, Sample(v=[0.0, 1.5], label='a'))
        self.assertNotEqual(a, Sample(v=[0.0, 1.0, 2.0], label='a'))
        self.assertEqual(1, len({a, b}))

    def test_copy_with(self):
        a = Sample(v=[0.0, 1.0], label='a')
        b = a.copy_with(label='b')

        self.assertEqual('b', b.label)
        self.assertEqual('a', a.label)
        self.assertTrue(np.array_equal(a.v, b.v))

    def test_keyword_only(self):
        with self.assertRaises(expected_exception=TypeError):
            Sample([0.0, 1.0])


class TestValidate(unittest.TestCase):
    def test_min_max(self):
        @validate(Parameter(name='r', validators=[Min(0, include_boundary=False), Max(np.pi / 2)]))
        def radius(r: float) -> float:
            return r

        self.assertEqual(1.0, radius(1.0))
        self.assertEqual(np.pi / 2, radius(r=np.pi / 2))

        for bad in [0.0, -1.0, 2.0]:
            with self.assertRaises(expected_exception=OutOfRange):
                radius(bad)

    def test_out_of_range_carries_parameter(self):
        @validate(Parameter(name='trials', validators=[Min(1)]))
        def run(trials: int) -> int:
            return trials

        with self.assertRaises(expected_exception=OutOfRange) as context:
            run(0)

        self.assertEqual('trials', context.exception.parameter_name)
        self.assertEqual('Min', context.exception.validator_name)
        self.assertEqual('0', context.exception.to_dict['VALUE'])

    def test_is_enum_converts(self):
        @validate(Parameter(name='space', validators=[IsEnum(Space)]))
        def which(space: Space) -> Space:
            return space

        self.assertIs(Space.HYPERBOLIC, which('h2'))
        self.assertIs(Space.SPHERE, which(Space.SPHERE))

        with self.assertRaises(expected_exception=OutOfRange):
            which('H3')

    def test_is_finite(self):
        validator = IsFinite()

        self.assertEqual(2.0, validator.validate(2))

        for bad in [float('inf'), float('nan'), True, 'x']:
            with self.assertRaises(expected_exception=ValidatorException):
                validator.validate(bad)

    def test_not_empty(self):
        self.assertEqual([1], NotEmpty().validate([1]))

        for bad in [[], (), 'abc', 3]:
            with self.assertRaises(expected_exception=ValidatorException):
                NotEmpty().validate(bad)

    def test_for_each_and_composite(self):
        positive = Composite([IsFinite(), Min(0, include_boundary=False)])

        self.assertEqual([0.5, 1.0], ForEach(positive).validate([0.5, 1]))

        with self.assertRaises(expected_exception=ValidatorException):
            ForEach(positive).validate([0.5, 0.0])

    def test_unknown_parameter(self):
        with self.assertRaises(expected_exception=ValidateException):
            @validate(Parameter(name='y'))
            def foo(x):
                return x

    def test_strict(self):
        with self.assertRaises(expected_exception=TooManyArguments):
            @validate(Parameter(name='x'), strict=True)
            def foo(x, y):
                return x + y

    def test_missing_argument(self):
        @validate(Parameter(name='x'))
        def foo(x):
            return x

        with self.assertRaises(expected_exception=ValidateException):
            foo()

    def test_required_none(self):
        @validate(Parameter(name='x', validators=[Min(0)]))
        def foo(x):
            return x

        with self.assertRaises(expected_exception=OutOfRange):
            foo(None)

    def test_optional_none_passes(self):
        @validate(Parameter(name='x', validators=[Min(0)], required=False))
        def foo(x=None):
            return x

        self.assertIsNone(foo(None))
        self.assertIsNone(foo())

    def test_value_type_conversion(self):
        @validate(Parameter(name='n', value_type=int, validators=[Min(2)]))
        def foo(n):
            return n

        self.assertEqual(5, foo('5'))

        with self.assertRaises(expected_exception=OutOfRange):
            foo('five')
