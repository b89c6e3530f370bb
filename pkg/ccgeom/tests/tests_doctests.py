import doctest
import importlib
import unittest


def run_doctests() -> None:
    unittest.TextTestRunner().run(get_doctest_test_suite())


def get_doctest_test_suite() -> unittest.TestSuite:
    module_names = [
        'ccgeom.config',
        'ccgeom.decorators.cls_deco_frozen_dataclass',
        'ccgeom.decorators.fn_deco_retry',
        'ccgeom.decorators.fn_deco_timer',
        'ccgeom.decorators.fn_deco_validate.fn_deco_validate',
        'ccgeom.decorators.fn_deco_validate.validators.is_finite',
        'ccgeom.decorators.fn_deco_validate.validators.max',
        'ccgeom.decorators.fn_deco_validate.validators.min',
        'ccgeom.space_kernel.space',
        'ccgeom.space_kernel.point',
        'ccgeom.space_kernel.metric',
        'ccgeom.space_kernel.isometry',
        'ccgeom.space_kernel.models',
        'ccgeom.space_kernel.distortion',
        'ccgeom.cycles.cycle',
        'ccgeom.cycles.curvature',
        'ccgeom.cycles.intersection',
        'ccgeom.regions.region',
        'ccgeom.symmetry.candidates',
        'ccgeom.symmetry.axes',
        'ccgeom.harness.scene',
        'ccgeom.harness.trial_pool',
        'ccgeom.harness.numerics',
        'ccgeom.harness.line_pairs',
        'ccgeom.harness.verify',
    ]
    modules = [importlib.import_module(name) for name in module_names]
    test_suites = [doctest.DocTestSuite(module=module, optionflags=doctest.ELLIPSIS) for module in modules]
    return unittest.TestSuite(test_suites)


if __name__ == '__main__':
    run_doctests()
