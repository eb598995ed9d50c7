use schubert::*;

fn main() {
    let e6 = RootSystem::new(Family::E, 6).unwrap();
    let s5 = SimpleSet::from_indices(0..5);
    let j5 = s5.remove(1);
    let j6 = SimpleSet::all(6).remove(1);
    let v5 = longest_element(&e6, s5).min_coset_rep(j5);
    let u6 = longest_element(&e6, j6);
    let w65 = v5.multiply(&u6).unwrap();
    println!("support(w65) = {}", w65.support());
    println!("n_delta(w65) = {}", w65.simple_inversions());
    println!("S(v5) = {}", v5.support());
    println!("interval size = {}", lower_interval_bruhat(&w65, 10_000_000).unwrap().len());
    let d = parabolic_decompose(&w65, j6, Side::Right);
    println!("BP across J6: v = len {}, u = len {}, is_bp(cond3) = {}", d.v.length(), d.u.length(), is_bp(&w65, j6, Side::Right));
    println!("grassmannian = {:?}", is_grassmannian_bp(&w65, j6, 10_000_000));
    let cert = decide_spherical(&w65).unwrap();
    println!("decide(w65) = {:?}", cert.verdict);
    let mut cur = &cert;
    let mut chain = vec![];
    loop {
        chain.push(format!("{:?}", std::mem::discriminant(&cur.reason)));
        match &cur.reason { Reason::KempfTransfer { inner, .. } | Reason::EReduction { inner, .. } => cur = inner, _ => break }
    }
    println!("chain depth = {}, leaf = {:?}", chain.len(), cur.reason);
}
