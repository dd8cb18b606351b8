use affweyl::*;
fn main() {
    let w = context_for(TypeLetter::A, 2, Twist::Identity).unwrap();
    let x = w.parse_element("t[1,0] s1 s2").unwrap();
    println!("x = {:?}", x);
    let f = w.eta(&x);
    println!("eta mat rows = {:?}, k={}", f.mat.rows(), f.delta_pow);
    println!("order eta = {}", w.fin.order(&f));
    let s1 = w.fin.simple(1);
    let s2 = w.fin.simple(2);
    println!("s1 = {:?}", s1.mat.rows());
    println!("s2 = {:?}", s2.mat.rows());
    let s1s2 = w.fin.mul(&s1, &s2).unwrap();
    println!("s1s2 = {:?}", s1s2.mat.rows());
    println!("order s1s2 = {}", w.fin.order(&s1s2));
    let report = w.is_finite_order(&x);
    println!("report = {:?}", report);
}
