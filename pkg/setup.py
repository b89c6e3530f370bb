from os import path

from setuptools import find_packages, setup


def get_content_from_readme(file_name: str = 'README.md') -> str:
    this_directory = path.abspath(path.dirname(__file__))

    with open(path.join(this_directory, file_name), encoding='utf-8') as file:
        return file.read()


setup(
    name="ccgeom",
    version="0.3.1",
    python_requires='>=3.11.0',
    packages=find_packages(exclude=['examples', 'examples.*']),
    install_requires=[
        'numpy>=1.26',
        'scipy>=1.11',
        'svgwrite>=1.4',
        'docstring-parser>=0.16',
    ],
    extras_require={
        'workers': ['multiprocess>=0.70.16'],
        'tests': ['hypothesis>=6.90', 'multiprocess>=0.70.16'],
    },
    entry_points={
        'console_scripts': ['ccgeom = ccgeom.harness.cli:main'],
    },
    license="Apache-2.0 License",
    description="Intersections and symmetry of convex regions bounded by cycles in the plane, "
                "the hyperbolic plane and the sphere.",
    long_description=get_content_from_readme(),
    long_description_content_type='text/markdown',
    keywords="geometry hyperbolic spherical convex symmetry cycles horocycles hypercycles",
    include_package_data=False,
    zip_safe=True,
)
