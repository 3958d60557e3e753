use plonka::io::Document;
use plonka::plonka::plonka_sum;
use plonka::random::gen_random_system;

fn main() {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    for (count, size) in [(1, 4), (2, 2), (3, 8)] {
        let sys = gen_random_system(seed, count, size).unwrap();
        println!(
            "seed {seed}, {count} × B{size}: {}, sum of size {}",
            sys.index(),
            plonka_sum(&sys).size()
        );
        for (&(i, j), f) in sys.transitions() {
            println!("  {i} -> {j}: {f}");
        }
    }
    print!(
        "{}",
        Document::System(gen_random_system(seed, 2, 2).unwrap()).to_json()
    );
}
