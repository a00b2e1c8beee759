//! Smith forms, lattice indices and kernels on the matrices behind a small fan.

use toric_tensegrity::exactlinalg::{
    determinant, elementary_divisors, format_rat, hermite_rows, kernel_basis, lattice_index, primitive, smith_form, ints, IntMatrix,
};

fn show(label: &str, m: &IntMatrix) {
    println!("{label}:");
    for row in m.row_vecs() {
        println!("  {}", row.iter().map(|x| format!("{x:>4}")).collect::<String>());
    }
}

fn main() {
    let cone = IntMatrix::from_i64_rows(&[&[-1, -1, -5], &[1, 2, 1], &[-1, 1, 1]]);
    show("cone generators", &cone);
    println!("det = {}, index = {}", determinant(&cone).unwrap(), lattice_index(&cone).unwrap());

    // a wall spans a rank-2 sublattice; its index is the product of the invariant factors
    let wall = IntMatrix::from_i64_rows(&[&[-1, -1, -5], &[-1, -1, 1]]);
    let s = smith_form(&wall);
    println!("wall invariant factors {:?}, index {}", s.diagonal, lattice_index(&wall).unwrap());
    show("left * wall * right", &s.left.mul(&wall).unwrap().mul(&s.right).unwrap());

    let mixed = IntMatrix::from_i64_rows(&[&[4, 6, 8], &[2, 2, 10], &[6, 8, 18]]);
    println!("elementary divisors of a singular 3x3: {:?}", elementary_divisors(&mixed));
    show("its row Hermite form", &hermite_rows(&mixed));
    for v in kernel_basis(&mixed.to_rat()) {
        println!("kernel vector ({})", v.iter().map(format_rat).collect::<Vec<_>>().join(", "));
    }

    println!("primitive(-(3, 1, 6)) = {:?}", primitive(&ints(&[-3, -1, -6])).unwrap());
    println!("primitive((4, -6, 2)) = {:?}", primitive(&ints(&[4, -6, 2])).unwrap());
}
