//! Complete GC specifications of the worked examples.

use std::sync::Arc;

use super::chain;
use crate::classical::{LinearCode, OuterCode, SubAlphabetCode, SubAlphabetStrategy, DEFAULT_BUDGET};
use crate::error::{Error, Result};
use crate::galois::FiniteField;
use crate::gc::GCSpec;
use crate::symplectic::NestedStabilizerChain;

fn field(q: u64) -> Result<Arc<FiniteField>> {
    Ok(Arc::new(FiniteField::with_order(q)?))
}

fn mds(q: u64, n: usize, k: usize) -> Result<OuterCode> {
    Ok(OuterCode::Linear(LinearCode::mds(field(q)?, n, k)?))
}

fn uniform(chain: Arc<NestedStabilizerChain>, outer: Vec<OuterCode>) -> GCSpec {
    let n = outer[0].length();
    GCSpec::mixed(vec![chain; n], outer)
}

/// `[6,3,4]_4` hexacode.
pub(crate) fn hexacode_outer() -> Result<OuterCode> {
    let rows = vec![vec![1, 0, 0, 1, 2, 2], vec![0, 1, 0, 2, 1, 2], vec![0, 0, 1, 2, 2, 1]];
    let mut code = LinearCode::new(field(4)?, rows)?;
    code.verify_claim(4, DEFAULT_BUDGET);
    Ok(OuterCode::Linear(code))
}

/// Example `k` of the four worked constructions.
pub(crate) fn worked_example(k: u32) -> Result<GCSpec> {
    match k {
        // Hexacode chain with [6,3,4]_4 and [6,5,2]_16: [[36,26,4]].
        1 => Ok(uniform(chain("hexacode_chain")?, vec![hexacode_outer()?, mds(16, 6, 5)?])),
        // Quantum Hamming [[21,15,3]] with [65,63,3]_64: [[1365,1353,3]].
        2 => Ok(uniform(chain("qhamming_chain(3)")?, vec![mds(64, 65, 63)?])),
        // Five-qubit code with 16 symbols of [18,16,3]_17: ((90, 2^81.825, 3)).
        3 => {
            let parent = LinearCode::mds(field(17)?, 18, 16)?;
            let a1 = SubAlphabetCode::new(parent, 16, SubAlphabetStrategy::ZeroShift)?;
            Ok(uniform(chain("five_chain")?, vec![OuterCode::SubAlphabet(a1)]))
        }
        // [[8,3,3]] chain with 4 symbols of [6,4,3]_5 and [6,5,2]_8: ((48, 2^40.36, 3)).
        4 => {
            let parent = LinearCode::mds(field(5)?, 6, 4)?;
            let a1 = SubAlphabetCode::new(parent, 4, SubAlphabetStrategy::BestCoset { budget: DEFAULT_BUDGET })?;
            Ok(uniform(chain("eight_chain")?, vec![OuterCode::SubAlphabet(a1), mds(8, 6, 5)?]))
        }
        _ => Err(Error::UnknownEntry(format!("worked example {k} (expected 1 to 4)"))),
    }
}

/// Steane chain at all 65 positions with [65,63,3]_64: [[455,443,3]].
pub(crate) fn steane_concatenation() -> Result<GCSpec> {
    Ok(uniform(chain("steane_chain")?, vec![mds(64, 65, 63)?]))
}

/// 64 Steane positions and one [[21,15,3]] position with [65,63,3]_64:
/// [[469,457,3]]. Both chains have 6-bit labels.
pub(crate) fn mixed_concatenation() -> Result<GCSpec> {
    let steane = chain("steane_chain")?;
    let qham = chain("qhamming_chain(3)")?;
    let mut positions = vec![steane; 64];
    positions.push(qham);
    Ok(GCSpec::mixed(positions, vec![mds(64, 65, 63)?]))
}
