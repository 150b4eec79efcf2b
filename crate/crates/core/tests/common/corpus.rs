#![allow(dead_code)]

//! Zero-dimensional test ideals: (variables, generators).

pub const IDEALS: &[(&[&str], &[&str])] = &[
    (&["x"], &["x"]),
    (&["x"], &["x^2 + x^3"]),
    (&["x"], &["x^7 - 3*x^9"]),
    (&["x", "y"], &["x", "y"]),
    (&["x", "y"], &["x^2", "y^3"]),
    (&["x", "y"], &["x*y", "x^3 + y^3"]),
    (&["x", "y"], &["y - x^2 - x^3", "x^4"]),
    (&["x", "y"], &["3*x^2 + y^5", "7*y^6 + 5*x*y^4"]),
    (&["x", "y"], &["x^3 + y^7 + x*y^5", "3*x^2 + y^5", "7*y^6 + 5*x*y^4"]),
    (&["x", "y"], &["x^2 + y^3", "x*y"]),
    (&["x", "y"], &["x^3 - y^2", "x^2*y + y^4"]),
    (&["x", "y"], &["x^2 + x^3", "y^3 + x*y + x^2*y"]),
    (&["x", "y"], &["x^5 + y^2", "x*y^3"]),
    (&["x", "y"], &["(x + y)*(x + y)*(x - y)", "x^2*y - 1/2*y^3"]),
    (&["x", "y", "z"], &["2*x^2 + z^2", "2*y^2 + z^2", "y*z", "x*z"]),
    (&["x", "y", "z"], &["4*x^3", "2*y", "2*z"]),
    (&["x", "y", "z"], &["3*x^2 + y^2", "2*x*y", "2*z"]),
    (&["x", "y", "z"], &["3*x^2", "4*y^3", "2*z"]),
    (&["x", "y", "z"], &["3*x^2 + y^3", "3*x*y^2", "2*z"]),
    (&["x", "y", "z"], &["3*x^2", "5*y^4", "2*z"]),
    (&["x", "y", "z"], &["x^2 + y^2 + z^2", "x^2 - y^2", "y*z", "x*z"]),
    (&["x", "y", "z"], &["x^2 + y*z", "y^2 + x*z", "z^2 + x*y"]),
    (&["x", "y", "z"], &["x*y", "y*z", "x*z", "x^2 + y^2 + z^2"]),
    (&["x", "y", "z", "w"], &["2*x", "2*y", "2*z", "2*w", "x^2 + y^2 + z^2 + w^2"]),
    (&["x", "y", "z", "w"], &["2*x", "2*y", "2*z", "3*w^2"]),
    (&["x", "y", "z", "w"], &["x^2", "y^2", "z^2", "w^2"]),
    (&["x", "y", "z", "w"], &["x*y + z^2", "y*z + w^2", "x^2 + w*y", "w^3 + x*z", "y^3"]),
];

/// Ideals of infinite colength.
pub const NON_ARTINIAN: &[(&[&str], &[&str])] = &[
    (&["x", "y"], &["x"]),
    (&["x", "y"], &["x*y"]),
    (&["x", "y", "z"], &["x*y", "x*z"]),
    (&["x", "y", "z"], &["x^2 + y^2 + z^2"]),
];
