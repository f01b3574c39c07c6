//! Small named complexes used throughout tests, docs and the CLI.

use crate::complex::Complex2;

/// A single triangle.
pub fn t1() -> Complex2 {
    Complex2::full(3, [[1, 2, 3]]).unwrap()
}

/// Boundary of the tetrahedron (a 2-sphere).
pub fn tet() -> Complex2 {
    Complex2::full(4, [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]).unwrap()
}

/// The 6-vertex real projective plane.
pub fn rp6() -> Complex2 {
    Complex2::full(
        6,
        [
            [1, 2, 3],
            [1, 2, 4],
            [1, 3, 5],
            [1, 4, 6],
            [1, 5, 6],
            [2, 3, 6],
            [2, 4, 5],
            [2, 5, 6],
            [3, 4, 5],
            [3, 4, 6],
        ],
    )
    .unwrap()
}

/// Complete graph on four vertices, no faces.
pub fn k4() -> Complex2 {
    Complex2::full(4, []).unwrap()
}

/// `K_5` skeleton with the single face `{1, 4, 5}`.
pub fn x5() -> Complex2 {
    Complex2::full(5, [[1, 4, 5]]).unwrap()
}

/// Looks up a fixture by name.
pub fn by_name(name: &str) -> Option<Complex2> {
    match name.to_ascii_lowercase().as_str() {
        "t1" => Some(t1()),
        "tet" => Some(tet()),
        "rp6" => Some(rp6()),
        "k4" => Some(k4()),
        "x5" => Some(x5()),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rp6_is_a_closed_surface() {
        let x = rp6();
        assert_eq!(x.f_vector(), [6, 15, 10]);
        assert!(x.face_degrees().iter().all(|&d| d == 2));
    }
}
