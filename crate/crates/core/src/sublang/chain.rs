use serde::{Deserialize, Serialize};

use super::formula::{formulaize, in_core, tokenize, CoreReport};
use super::spec::{ConjunctionMode, Sublanguage};
use super::SublangError;

/// Longest chain length, counted in sentences, explored by
/// [`verify_right_ideal_property`] unless told otherwise.
pub const DEFAULT_CLOSURE_DEPTH: usize = 3;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Link {
    pub conjunction: String,
    pub sentence: String,
}

/// `S C S ... C S`: a head sentence followed by conjoined sentences.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscourseChain {
    pub head: String,
    #[serde(default)]
    pub tail: Vec<Link>,
}

impl DiscourseChain {
    pub fn new(head: impl Into<String>) -> Self {
        DiscourseChain {
            head: head.into(),
            tail: Vec::new(),
        }
    }

    pub fn then(mut self, conjunction: impl Into<String>, sentence: impl Into<String>) -> Self {
        self.tail.push(Link {
            conjunction: conjunction.into(),
            sentence: sentence.into(),
        });
        self
    }

    pub fn len(&self) -> usize {
        1 + self.tail.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn to_text(&self) -> String {
        let mut out = self.head.clone();
        for link in &self.tail {
            out.push_str(&format!(" {} {}", link.conjunction, link.sentence));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainDecision {
    pub accepted: bool,
    pub head: CoreReport,
    /// Tail positions joined by a strict conjunction whose sentence is not
    /// in the core.
    pub strict_failures: Vec<usize>,
}

fn sentence_in_core(lang: &Sublanguage, sentence: &str) -> CoreReport {
    in_core(&formulaize(&tokenize(sentence), &lang.lexicon), &lang.spec)
}

fn modes(lang: &Sublanguage, chain: &DiscourseChain) -> Result<Vec<ConjunctionMode>, SublangError> {
    chain
        .tail
        .iter()
        .map(|link| {
            lang.spec
                .conjunction(&link.conjunction)
                .map(|c| c.mode)
                .ok_or_else(|| SublangError::UnknownConjunction(link.conjunction.clone()))
        })
        .collect()
}

/// A chain belongs to the extended sublanguage when its head is in the core
/// and every sentence after a strict conjunction is too. Sentences after
/// permissive conjunctions are unrestricted.
pub fn chain_membership(lang: &Sublanguage, chain: &DiscourseChain) -> Result<ChainDecision, SublangError> {
    let modes = modes(lang, chain)?;
    let head = sentence_in_core(lang, &chain.head);
    let strict_failures: Vec<usize> = chain
        .tail
        .iter()
        .zip(&modes)
        .enumerate()
        .filter(|(_, (link, &mode))| {
            mode == ConjunctionMode::Strict && !sentence_in_core(lang, &link.sentence).accepted
        })
        .map(|(i, _)| i)
        .collect();
    Ok(ChainDecision {
        accepted: head.accepted && strict_failures.is_empty(),
        head,
        strict_failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct R1Outcome {
    pub holds: bool,
    pub extensions_checked: usize,
    /// An accepted chain whose one-step extension is rejected.
    pub counterexample: Option<(DiscourseChain, DiscourseChain)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum R2Outcome {
    /// A rejected sentence put in front of a core sentence gives a rejected
    /// chain, so acceptance is not preserved on the left.
    Witness {
        chain: DiscourseChain,
    },
    NoWitness,
    NotSought,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RightIdealReport {
    pub depth: usize,
    pub core_pool: usize,
    pub general_pool: usize,
    pub r1: R1Outcome,
    pub r2: R2Outcome,
}

impl RightIdealReport {
    pub fn passed(&self) -> bool {
        self.r1.holds && !matches!(self.r2, R2Outcome::NoWitness)
    }
}

/// Checks that accepted chains stay accepted when extended on the right by
/// any permissive conjunction and any pool sentence (R1), and looks for a
/// rejected sentence that spoils a core sentence when put in front (R2).
///
/// Every chain of at most `depth - 1` sentences over both pools and all
/// conjunctions is enumerated; the accepted ones are extended by one step.
pub fn verify_right_ideal_property(
    lang: &Sublanguage,
    core_pool: &[String],
    general_pool: &[String],
    depth: usize,
) -> Result<RightIdealReport, SublangError> {
    if core_pool.is_empty() {
        return Err(SublangError::EmptyPool("core"));
    }
    for s in core_pool {
        if !sentence_in_core(lang, s).accepted {
            return Err(SublangError::PoolPrecondition {
                pool: "core",
                sentence: s.clone(),
                problem: "is not in the core",
            });
        }
    }
    for s in general_pool {
        if sentence_in_core(lang, s).accepted {
            return Err(SublangError::PoolPrecondition {
                pool: "general",
                sentence: s.clone(),
                problem: "is in the core",
            });
        }
    }
    let sentences: Vec<&String> = core_pool.iter().chain(general_pool).collect();
    let in_core_flag: Vec<bool> = (0..sentences.len()).map(|i| i < core_pool.len()).collect();
    let conjunctions = &lang.spec.conjunctions;

    // Chains as (head index, [(conjunction index, sentence index)]).
    type Indexed = (usize, Vec<(usize, usize)>);
    let accepted = |(head, tail): &Indexed| {
        in_core_flag[*head]
            && tail
                .iter()
                .all(|&(c, s)| conjunctions[c].mode == ConjunctionMode::Permissive || in_core_flag[s])
    };
    let to_chain = |(head, tail): &Indexed| DiscourseChain {
        head: sentences[*head].clone(),
        tail: tail
            .iter()
            .map(|&(c, s)| Link {
                conjunction: conjunctions[c].word.clone(),
                sentence: sentences[s].clone(),
            })
            .collect(),
    };

    let mut r1 = R1Outcome {
        holds: true,
        extensions_checked: 0,
        counterexample: None,
    };
    let mut layer: Vec<Indexed> = (0..sentences.len()).map(|h| (h, vec![])).collect();
    for _ in 1..depth {
        let mut next = Vec::new();
        for chain in &layer {
            let base_accepted = accepted(chain);
            for (c, conjunction) in conjunctions.iter().enumerate() {
                for s in 0..sentences.len() {
                    let mut ext = chain.clone();
                    ext.1.push((c, s));
                    if base_accepted && conjunction.mode == ConjunctionMode::Permissive {
                        r1.extensions_checked += 1;
                        if !accepted(&ext) && r1.counterexample.is_none() {
                            r1.holds = false;
                            r1.counterexample = Some((to_chain(chain), to_chain(&ext)));
                        }
                    }
                    next.push(ext);
                }
            }
        }
        layer = next;
    }

    let r2 = if general_pool.is_empty() || conjunctions.is_empty() {
        R2Outcome::NotSought
    } else {
        let general = core_pool.len()..sentences.len();
        general
            .flat_map(|g| {
                (0..conjunctions.len())
                    .flat_map(move |c| (0..core_pool.len()).map(move |s| (g, vec![(c, s)])))
            })
            .find(|chain| !accepted(chain))
            .map_or(R2Outcome::NoWitness, |chain| R2Outcome::Witness {
                chain: to_chain(&chain),
            })
    };

    Ok(RightIdealReport {
        depth,
        core_pool: core_pool.len(),
        general_pool: general_pool.len(),
        r1,
        r2,
    })
}
