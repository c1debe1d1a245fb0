//! Standard CW structures on classic surfaces with their textbook cohomology.

use crate::Mat;

pub struct Surface {
    pub name: &'static str,
    pub vertices: usize,
    pub edges: usize,
    pub faces: usize,
    pub d1: Mat,
    pub d2: Mat,
    /// Rendered H^0, H^1, H^2.
    pub expected: [&'static str; 3],
}

pub fn surfaces() -> Vec<Surface> {
    vec![
        Surface {
            name: "circle",
            vertices: 1,
            edges: 1,
            faces: 0,
            d1: vec![vec![0]],
            d2: vec![vec![]],
            expected: ["Z", "Z", "0"],
        },
        Surface {
            name: "torus",
            vertices: 1,
            edges: 2,
            faces: 1,
            d1: vec![vec![0, 0]],
            d2: vec![vec![0], vec![0]],
            expected: ["Z", "Z^2", "Z"],
        },
        Surface {
            // two vertices joined by one edge, one disc glued along a -a
            name: "sphere",
            vertices: 2,
            edges: 1,
            faces: 1,
            d1: vec![vec![-1], vec![1]],
            d2: vec![vec![0]],
            expected: ["Z", "0", "Z"],
        },
        Surface {
            name: "rp2",
            vertices: 1,
            edges: 1,
            faces: 1,
            d1: vec![vec![0]],
            d2: vec![vec![2]],
            expected: ["Z", "0", "Z/2"],
        },
        Surface {
            // word a b a b^-1
            name: "klein",
            vertices: 1,
            edges: 2,
            faces: 1,
            d1: vec![vec![0, 0]],
            d2: vec![vec![2], vec![0]],
            expected: ["Z", "Z", "Z/2"],
        },
    ]
}
