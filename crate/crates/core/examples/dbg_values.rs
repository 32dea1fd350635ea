use num_bigint::BigInt;
fn main() {
    let g = hsg_core::graph::parse_game(hsg_core::test_assets::FIG1).unwrap();
    let mg = hsg_core::lexenergy::MultiGame::from_graph(&g).unwrap();
    let enc = hsg_core::lexenergy::encode_to_mpg(&mg).unwrap();
    let vals = hsg_core::mpg::compute_values(&enc.wgraph, hsg_core::mpg::Engine::StrategyImprovement).unwrap();
    for (v, val) in vals.iter().enumerate() {
        println!("{}: {}/{}", g.vertex(v).id, val.0, val.1);
    }
    let _ = BigInt::from(0);
}
