import numpy as np
import pytest

from pupeck import benchdata, data


@pytest.fixture(scope="session")
def bench_dir(tmp_path_factory):
    out = tmp_path_factory.mktemp("benchdata")
    benchdata.write_benchmark_csvs(out)
    return out


def _load(bench_dir, name):
    raw = data.load_csv(str(bench_dir / f"{name}.csv"), "class")
    return data.preprocess(raw)


@pytest.fixture(scope="session")
def banknote_ds(bench_dir):
    return _load(bench_dir, "banknote")


@pytest.fixture(scope="session")
def breastc_ds(bench_dir):
    return _load(bench_dir, "breastc")


@pytest.fixture(scope="session")
def wdbc_ds(bench_dir):
    return _load(bench_dir, "wdbc")


@pytest.fixture(scope="session")
def artif_ds():
    return data.generate_artif(seed=11)


@pytest.fixture(scope="session")
def blobs_2d():
    """Two well-separated 2-D blobs; class 1 = the upper-right blob."""
    rng = np.random.default_rng(42)
    n = 120
    y = np.repeat([0, 1], n // 2)
    X = rng.normal(scale=0.25, size=(n, 2)) + np.column_stack([y * 3.0, y * 3.0])
    perm = rng.permutation(n)
    return data.Dataset(X=(X[perm] - X.min(0)) / (X.max(0) - X.min(0)),
                        y=y[perm].astype(np.int64), feature_names=["a", "b"])
