import os
from setuptools import find_packages, setup


def parse_requirements(file):
    return sorted(set(
        line.partition('#')[0].strip()
        for line in open(os.path.join(os.path.dirname(__file__), file))
    ) - {''})


setup(
    name='qmock',
    license='MIT License',
    keywords=['q-series', 'mock theta functions', 'partitions',
              'indefinite theta functions', 'modular forms'],
    packages=find_packages(exclude=['tests']),
    include_package_data=True,
    version='0.1',
    description='Exact q-series and numeric modular completions for a '
                'two-color partition identity',
    install_requires=parse_requirements("requirements.txt"),
    extras_require={
      'test': parse_requirements('requirements_test.txt')
    },
    entry_points={
        'console_scripts': ['qmock=qmock.cli.qmock_cli:main'],
    },
    zip_safe=False,
    setup_requires=['pytest-runner'],
    tests_require=['pytest']
    )
