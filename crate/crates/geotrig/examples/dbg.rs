use geotrig::bodies::*;
use geotrig::vec2::*;

fn main() {
    let o2 = ConeBody::alpha_hyperbola(2.0).unwrap();
    println!("antinorm(1,1) = {:e}", o2.antinorm(vec2(1.0, 1.0)));
    println!("radial(pi/4) = {:e}", o2.radial(std::f64::consts::FRAC_PI_4));

    let o3 = ConeBody::alpha_hyperbola(3.0).unwrap();
    let dual = antipolar(&o3, 64).unwrap();
    let beta = ConeBody::alpha_hyperbola(1.5).unwrap();
    println!("hc exact-beta 20: {:e}", hausdorff_cone(&dual, &beta, 20.0, 512));
    let sampled = antipolar_sampled(&o3, 4096).unwrap();
    println!("hc sampled-beta 10: {:e}", hausdorff_cone(&sampled, &beta, 10.0, 512));

    let e = ConvexBody::ellipse(2.0, 1.0).unwrap();
    let exact = polar(&e, 4096);
    let samp = polar_sampled(&e, 4096);
    println!("hcompact: {:e}", hausdorff_compact(&exact, &samp, 4096));
    // where is the max?
    let mut worst = 0.0; let mut wd = 0.0;
    for k in 0..4096 {
        let d = Vec2::unit(std::f64::consts::TAU * k as f64 / 4096 as f64);
        let g = (exact.support(d) - samp.support(d)).abs();
        if g > worst { worst = g; wd = d.angle(); }
    }
    println!("worst {:e} at angle {}", worst, wd);
}
