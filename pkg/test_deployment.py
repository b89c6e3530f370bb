from ccgeom.tests.tests_main import run_all_tests

if __name__ == '__main__':
    run_all_tests()
