from setuptools import find_packages, setup


with open("README.md", "r") as fh:
    long_description = fh.read()

REQUIRED_PACKAGES = ['scipy',
                     'numpy',
                     'psutil'
                     ]

setup(
    name="mirabolic-howe",
    version="0.1.0",
    description="Mirabolic q-Schur algebras: generator actions, finite-field oracle and duality checks",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license='MIT License',
    packages=find_packages(exclude=['contrib', 'docs', 'tests*', 'examples*']),
    install_requires=REQUIRED_PACKAGES,
    classifiers=(
        "Development Status :: 3 - Alpha",
        "Intended Audience :: Science/Research",
        "License :: OSI Approved :: MIT License",
        "Programming Language :: Python :: 3.8",
        "Topic :: Scientific/Engineering :: Mathematics",
    ),
    entry_points={
        'console_scripts': [
            'mirabolic = mirabolic_howe.runner.cli:main',
        ]
    },
    python_requires='>=3.8',
)
