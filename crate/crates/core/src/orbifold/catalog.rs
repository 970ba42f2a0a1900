//! The standard test manifolds.

use alloc::vec;
use alloc::vec::Vec;

use super::ManifoldData;

fn build(name: &str, dim_c: u32, hodge: Vec<Vec<u64>>, cy: bool) -> ManifoldData {
    let x = ManifoldData::complex(name, dim_c, &hodge).expect("catalog entry is valid");
    if cy {
        x.with_calabi_yau().expect("catalog entry is complex")
    } else {
        x
    }
}

pub fn point() -> ManifoldData {
    build("point", 0, vec![vec![1]], true)
}

pub fn p1() -> ManifoldData {
    build("P1", 1, vec![vec![1, 0], vec![0, 1]], false)
}

pub fn elliptic_curve() -> ManifoldData {
    build("elliptic", 1, vec![vec![1, 1], vec![1, 1]], true)
}

pub fn genus2_curve() -> ManifoldData {
    build("genus2", 1, vec![vec![1, 2], vec![2, 1]], false)
}

pub fn p2() -> ManifoldData {
    build(
        "P2",
        2,
        vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1]],
        false,
    )
}

pub fn k3() -> ManifoldData {
    build(
        "K3",
        2,
        vec![vec![1, 0, 1], vec![0, 20, 0], vec![1, 0, 1]],
        true,
    )
}

pub fn abelian_surface() -> ManifoldData {
    build(
        "abelian",
        2,
        vec![vec![1, 2, 1], vec![2, 4, 2], vec![1, 2, 1]],
        true,
    )
}

pub fn p1xp1() -> ManifoldData {
    build(
        "P1xP1",
        2,
        vec![vec![1, 0, 0], vec![0, 2, 0], vec![0, 0, 1]],
        false,
    )
}

/// All eight entries, in a fixed order.
pub fn all() -> Vec<ManifoldData> {
    vec![
        point(),
        p1(),
        elliptic_curve(),
        genus2_curve(),
        p2(),
        k3(),
        abelian_surface(),
        p1xp1(),
    ]
}
