from setuptools import setup, find_packages

setup(
    name="praset",
    version="0.1.0",
    description="Preferred answer sets of prioritized extended logic programs",
    packages=find_packages(exclude=["tests", "tests.*"]),
    package_data={"praset": ["config/*.json"]},
    install_requires=[
        "click>=8.1,<8.2",
        "lark>=1.1.7",
        "loguru",
        "networkx>=3.1",
        "psutil",
        "python-dotenv",
    ],
    entry_points={
        "console_scripts": [
            "praset=praset.main:cli",
        ],
    },
    python_requires=">=3.8",
)
