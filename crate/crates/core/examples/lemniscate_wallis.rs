//! The classical sine and lemniscate Wallis products.

use gentrig::integrals::ClassicalWallis;

fn main() -> gentrig::Result<()> {
    for formula in ClassicalWallis::ALL {
        print!("{:<9}", formula.name());
        for n in 0..6 {
            print!(" {:.10}", formula.value(n)?);
        }
        println!();
    }
    Ok(())
}
