from setuptools import setup, find_packages
from fusscat.globals import VERSION

# https://github.com/kennethreitz/setup.py/blob/master/setup.py


with open("README.md", "r") as fh:
    long_description = fh.read()

extras = {
    "profiler": ["pyinstrument>=2.0"],
}
test_deps = ["pytest", "hypothesis>=5.0"]

all_deps = []
for group_name in extras:
    all_deps += extras[group_name]
all_deps = all_deps + test_deps
extras["all"] = all_deps
extras["test"] = test_deps


setup(
    name="fusscat",
    version=VERSION,
    author="The fusscat authors",
    description="Exact multivariate Fuss-Catalan numbers, lattice paths "
    "and generating functions",
    long_description=long_description,
    long_description_content_type="text/markdown",
    license="GNU",
    python_requires=">=3.8.0",
    packages=find_packages(exclude=["tests", "tests.*"]),
    install_requires=[
        "numpy>=1.14",
        "docopt>=0.6",
        "pandas>=1.0.5",
    ],
    test_requires=test_deps,
    extras_require=extras,
    entry_points={"console_scripts": ["fusscat=fusscat.app:main"]},
    include_package_data=True,
)
