//! Dense pairwise contraction engine with a greedy planner.

use alloc::vec;
use alloc::vec::Vec;

use num_complex::Complex64;

use super::NetworkSpec;
use crate::spectral::PureState;
use crate::{Error, Result};

/// Default cap on intermediate tensor size, in complex elements.
pub const DEFAULT_MEMORY_CAP: usize = 1 << 26;

/// Dense tensor whose legs all have dimension 2. Leg `k` is bit
/// `rank - 1 - k` of the flat index.
#[derive(Debug, Clone, PartialEq)]
pub struct Tensor {
    legs: Vec<usize>,
    data: Vec<Complex64>,
}

impl Tensor {
    pub fn new(legs: Vec<usize>, data: Vec<Complex64>) -> Result<Self> {
        if legs.len() > 40 || data.len() != 1 << legs.len() {
            return Err(Error::ArityMismatch {
                expected: 1usize << legs.len().min(40),
                found: data.len(),
            });
        }
        Ok(Tensor { legs, data })
    }

    /// Generalized copy tensor: 1 when every leg agrees, 0 otherwise.
    pub fn copy(legs: Vec<usize>) -> Self {
        let mut data = vec![Complex64::new(0.0, 0.0); 1 << legs.len()];
        data[0] = Complex64::new(1.0, 0.0);
        let last = data.len() - 1;
        data[last] = Complex64::new(1.0, 0.0);
        Tensor { legs, data }
    }

    pub fn rank(&self) -> usize {
        self.legs.len()
    }

    pub fn legs(&self) -> &[usize] {
        &self.legs
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    /// Sums over every leg shared with `other`; the result carries this
    /// tensor's free legs followed by `other`'s.
    pub fn contract(&self, other: &Tensor, cap: usize) -> Result<Tensor> {
        let shared: Vec<usize> = self
            .legs
            .iter()
            .copied()
            .filter(|l| other.legs.contains(l))
            .collect();
        let free_a: Vec<usize> = self
            .legs
            .iter()
            .copied()
            .filter(|l| !shared.contains(l))
            .collect();
        let free_b: Vec<usize> = other
            .legs
            .iter()
            .copied()
            .filter(|l| !shared.contains(l))
            .collect();
        let rank = free_a.len() + free_b.len();
        if rank >= usize::BITS as usize - 1 || 1usize << rank > cap {
            return Err(Error::MemoryCap {
                required: 1usize.checked_shl(rank as u32).unwrap_or(usize::MAX),
                cap,
            });
        }
        let free_off_a = offsets(&self.legs, &free_a);
        let shared_off_a = offsets(&self.legs, &shared);
        let free_off_b = offsets(&other.legs, &free_b);
        let shared_off_b = offsets(&other.legs, &shared);

        let mut data = vec![Complex64::new(0.0, 0.0); 1 << rank];
        let nb = free_b.len();
        for (ra, &oa) in free_off_a.iter().enumerate() {
            for (rb, &ob) in free_off_b.iter().enumerate() {
                let mut acc = Complex64::new(0.0, 0.0);
                for (&sa, &sb) in shared_off_a.iter().zip(&shared_off_b) {
                    acc += self.data[oa | sa] * other.data[ob | sb];
                }
                data[(ra << nb) | rb] = acc;
            }
        }
        let mut legs = free_a;
        legs.extend(free_b);
        Ok(Tensor { legs, data })
    }
}

/// For every assignment of `subset` (leading leg = leading bit), the flat
/// offset it contributes inside a tensor with legs `all`.
/// Element count of a rank-`rank` tensor, saturating far beyond any cap.
fn size(rank: usize) -> i128 {
    1i128 << rank.min(120)
}

fn offsets(all: &[usize], subset: &[usize]) -> Vec<usize> {
    let rank = all.len();
    let shifts: Vec<usize> = subset
        .iter()
        .map(|l| rank - 1 - all.iter().position(|x| x == l).expect("leg present"))
        .collect();
    let k = subset.len();
    (0..1usize << k)
        .map(|r| {
            shifts
                .iter()
                .enumerate()
                .filter(|(j, _)| (r >> (k - 1 - j)) & 1 == 1)
                .fold(0usize, |acc, (_, &s)| acc | (1 << s))
        })
        .collect()
}

/// Whether physical legs stay open (state) or are summed over (scalar).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhysicalLegs {
    Open,
    Summed,
}

/// Sequence of pairwise contractions. Tensors are numbered `0..N` initially;
/// step `k` consumes two live tensors and creates tensor `N + k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionOrder {
    pub steps: Vec<(usize, usize)>,
}

impl ContractionOrder {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Explicit tensor network: plaquette tensors `0..P`, then one copy tensor
/// per site.
#[derive(Debug, Clone)]
pub struct TensorNetwork {
    tensors: Vec<Tensor>,
    n_sites: usize,
    /// Physical leg id of each site when legs are open.
    physical: Vec<Option<usize>>,
}

#[derive(Debug, Clone)]
pub struct ContractedTensor {
    pub tensor: Tensor,
    pub peak_rank: usize,
    pub peak_elements: usize,
}

impl TensorNetwork {
    pub fn from_spec(spec: &NetworkSpec, mode: PhysicalLegs) -> Self {
        let mut tensors = Vec::with_capacity(spec.plaquettes().len() + spec.n_sites());
        let mut next_leg = 0usize;
        let mut leg_of = Vec::with_capacity(spec.plaquettes().len());
        for (p, table) in spec.plaquettes().iter().zip(spec.tables()) {
            let legs: Vec<usize> = (next_leg..next_leg + p.len()).collect();
            next_leg += p.len();
            leg_of.push(legs.clone());
            tensors.push(Tensor {
                legs,
                data: table.clone(),
            });
        }
        let mut physical = vec![None; spec.n_sites()];
        for (site, incident) in spec.incidence().into_iter().enumerate() {
            let mut legs: Vec<usize> = incident.iter().map(|&(p, k)| leg_of[p][k]).collect();
            if mode == PhysicalLegs::Open {
                let phys = next_leg + site;
                legs.push(phys);
                physical[site] = Some(phys);
            }
            tensors.push(Tensor::copy(legs));
        }
        TensorNetwork {
            tensors,
            n_sites: spec.n_sites(),
            physical,
        }
    }

    pub fn tensors(&self) -> &[Tensor] {
        &self.tensors
    }

    /// Greedy order: repeatedly contract the connected pair of live tensors
    /// whose contraction shrinks storage the most, i.e. minimizes
    /// `|result| - |a| - |b|` (ties: lowest tensor ids). Pairs without shared
    /// legs are only taken once nothing else is left.
    pub fn plan(&self) -> ContractionOrder {
        let mut live: Vec<Option<Vec<usize>>> = self
            .tensors
            .iter()
            .map(|t| {
                let mut l = t.legs.clone();
                l.sort_unstable();
                Some(l)
            })
            .collect();
        let mut steps = Vec::new();
        loop {
            let ids: Vec<usize> = (0..live.len()).filter(|&i| live[i].is_some()).collect();
            if ids.len() < 2 {
                break;
            }
            let mut best: Option<((bool, i128), usize, usize)> = None;
            for (k, &i) in ids.iter().enumerate() {
                for &j in &ids[k + 1..] {
                    let (a, b) = (live[i].as_ref().unwrap(), live[j].as_ref().unwrap());
                    let shared = a.iter().filter(|l| b.binary_search(l).is_ok()).count();
                    // disconnected pairs sort after every connected one
                    let out = a.len() + b.len() - 2 * shared;
                    let growth = size(out) - size(a.len()) - size(b.len());
                    let key = (shared == 0, growth);
                    if best.as_ref().is_none_or(|(bk, _, _)| key < *bk) {
                        best = Some((key, i, j));
                    }
                }
            }
            let (_, i, j) = best.expect("at least two live tensors");
            let (a, b) = (live[i].take().unwrap(), live[j].take().unwrap());
            let mut merged: Vec<usize> = a
                .iter()
                .copied()
                .filter(|l| b.binary_search(l).is_err())
                .chain(b.iter().copied().filter(|l| a.binary_search(l).is_err()))
                .collect();
            merged.sort_unstable();
            live.push(Some(merged));
            steps.push((i, j));
        }
        ContractionOrder { steps }
    }

    /// Executes `order`, tracking the largest intermediate tensor.
    pub fn contract(&self, order: &ContractionOrder, cap: usize) -> Result<ContractedTensor> {
        let mut live: Vec<Option<Tensor>> = self.tensors.iter().cloned().map(Some).collect();
        let mut peak_rank = live.iter().flatten().map(Tensor::rank).max().unwrap_or(0);
        for &(i, j) in &order.steps {
            if i == j || i >= live.len() || j >= live.len() {
                return Err(Error::InvalidOrder(alloc::format!(
                    "step ({i}, {j}) with {} tensors",
                    live.len()
                )));
            }
            let (a, b) = match (live[i].take(), live[j].take()) {
                (Some(a), Some(b)) => (a, b),
                _ => {
                    return Err(Error::InvalidOrder(alloc::format!(
                        "step ({i}, {j}) uses a consumed tensor"
                    )))
                }
            };
            let c = a.contract(&b, cap)?;
            peak_rank = peak_rank.max(c.rank());
            live.push(Some(c));
        }
        let mut rest = live.into_iter().flatten();
        match (rest.next(), rest.next()) {
            (Some(tensor), None) => Ok(ContractedTensor {
                tensor,
                peak_rank,
                peak_elements: 1 << peak_rank,
            }),
            _ => Err(Error::InvalidOrder(
                "order does not reduce the network to one tensor".into(),
            )),
        }
    }

    /// Reorders the open physical legs of the final tensor into a state
    /// vector with site 0 as the leading bit.
    fn to_state_vector(&self, t: &Tensor) -> Result<Vec<Complex64>> {
        let n = self.n_sites;
        let site_of_leg: Vec<usize> = t
            .legs
            .iter()
            .map(|l| {
                self.physical
                    .iter()
                    .position(|p| *p == Some(*l))
                    .ok_or_else(|| Error::InvalidOrder("final tensor has ancilla legs".into()))
            })
            .collect::<Result<_>>()?;
        if site_of_leg.len() != n {
            return Err(Error::InvalidOrder("physical legs missing".into()));
        }
        let mut out = vec![Complex64::new(0.0, 0.0); 1 << n];
        let rank = t.rank();
        for (idx, &v) in t.data.iter().enumerate() {
            let mut x = 0usize;
            for (k, &s) in site_of_leg.iter().enumerate() {
                if (idx >> (rank - 1 - k)) & 1 == 1 {
                    x |= 1 << (n - 1 - s);
                }
            }
            out[x] = v;
        }
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub struct PairwiseContraction {
    pub state: PureState,
    pub norm_sqr: f64,
    pub peak_rank: usize,
    pub peak_elements: usize,
}

/// Greedy order for the open network of `spec`.
pub fn plan_order(spec: &NetworkSpec) -> ContractionOrder {
    TensorNetwork::from_spec(spec, PhysicalLegs::Open).plan()
}

/// Contracts `spec` pair by pair along `order` with an intermediate size cap
/// (elements).
pub fn contract_pairwise(
    spec: &NetworkSpec,
    order: &ContractionOrder,
    cap: usize,
) -> Result<PairwiseContraction> {
    if spec.n_sites() > crate::spectral::MAX_DENSE_QUBITS {
        return Err(Error::SizeCap {
            what: "pairwise contraction",
            size: spec.n_sites(),
            cap: crate::spectral::MAX_DENSE_QUBITS,
        });
    }
    let net = TensorNetwork::from_spec(spec, PhysicalLegs::Open);
    let out = net.contract(order, cap)?;
    let amps = net.to_state_vector(&out.tensor)?;
    let norm_sqr: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
    if !(norm_sqr > 0.0) {
        return Err(Error::ZeroState);
    }
    Ok(PairwiseContraction {
        state: PureState::new(spec.n_sites(), amps)?,
        norm_sqr,
        peak_rank: out.peak_rank,
        peak_elements: out.peak_elements,
    })
}
