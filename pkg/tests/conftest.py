from planebranch import kernels


def pytest_generate_tests(metafunc):
    if "kernel" in metafunc.fixturenames:
        metafunc.parametrize("kernel", kernels.backends(), ids=lambda k: k.NAME)
