//! Prints a seeded `G(n, p)` sample as graph6: `sample <n> <p> <seed>`.

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if args.len() != 3 {
        eprintln!("usage: sample <n> <p> <seed>");
        std::process::exit(2);
    }
    let n = args[0].parse().expect("n is an integer");
    let p = args[1].parse().expect("p is a float");
    let seed = args[2].parse().expect("seed is an integer");
    let g = genpos::lab::random_connected_graph(n, p, seed).unwrap();
    println!("{}", genpos::graph6::encode(&g));
}
