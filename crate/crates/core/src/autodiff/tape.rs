use super::matrix::{matmul, matmul_transpose_left, matmul_transpose_right, transpose_groups};
use super::{Activation, AutodiffError, Matrix, ParamId, ParamStore};

/// Handle to a value recorded on a [`Tape`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Var(usize);

#[derive(Debug, Clone)]
enum Op {
    Input,
    Param(ParamId),
    MatMul(Var, Var),
    AddBias(Var, Var),
    Add(Var, Var),
    Activation(Var, Activation),
    TransposeGroups { x: Var, groups: usize },
    Reshape(Var),
    Patchify { x: Var, patch: usize, stride: usize, patches: usize },
    Sum(Var),
}

#[derive(Debug, Clone)]
struct Node {
    op: Op,
    value: Matrix,
    needs_grad: bool,
}

/// Define-by-run record of a forward computation.
///
/// Nodes are appended in evaluation order, so a reverse sweep over the node
/// list is a valid reverse topological order.
#[derive(Debug, Clone, Default)]
pub struct Tape {
    nodes: Vec<Node>,
}

/// Gradients of every recorded node from one backward sweep.
#[derive(Debug, Clone)]
pub struct Gradients {
    grads: Vec<Option<Matrix>>,
}

impl Gradients {
    pub fn get(&self, var: Var) -> Option<&Matrix> {
        self.grads[var.0].as_ref()
    }
}

fn mismatch(op: &'static str, detail: String) -> AutodiffError {
    AutodiffError::ShapeMismatch { op, detail }
}

impl Tape {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn value(&self, var: Var) -> &Matrix {
        &self.nodes[var.0].value
    }

    fn push(&mut self, op: Op, value: Matrix, needs_grad: bool) -> Var {
        self.nodes.push(Node {
            op,
            value,
            needs_grad,
        });
        Var(self.nodes.len() - 1)
    }

    fn needs(&self, var: Var) -> bool {
        self.nodes[var.0].needs_grad
    }

    /// Constant input. Its gradient is not tracked.
    pub fn input(&mut self, value: Matrix) -> Var {
        self.push(Op::Input, value, false)
    }

    /// Input whose gradient is reported by [`Tape::backward`].
    pub fn tracked_input(&mut self, value: Matrix) -> Var {
        self.push(Op::Input, value, true)
    }

    pub fn param(&mut self, store: &ParamStore, id: ParamId) -> Var {
        self.push(Op::Param(id), store.get(id).as_matrix(), true)
    }

    pub fn matmul(&mut self, a: Var, b: Var) -> Result<Var, AutodiffError> {
        let (av, bv) = (self.value(a), self.value(b));
        if av.cols() != bv.rows() {
            return Err(mismatch("matmul", format!("{:?} x {:?}", av.shape(), bv.shape())));
        }
        let out = matmul(av, bv);
        let needs = self.needs(a) || self.needs(b);
        Ok(self.push(Op::MatMul(a, b), out, needs))
    }

    /// Adds a `[1, cols]` bias to every row of `x`.
    pub fn add_bias(&mut self, x: Var, bias: Var) -> Result<Var, AutodiffError> {
        let (xv, bv) = (self.value(x), self.value(bias));
        if bv.rows() != 1 || bv.cols() != xv.cols() {
            return Err(mismatch("add_bias", format!("{:?} + {:?}", xv.shape(), bv.shape())));
        }
        let mut out = xv.clone();
        let cols = out.cols();
        for row in out.data_mut().chunks_exact_mut(cols) {
            for (o, b) in row.iter_mut().zip(bv.data()) {
                *o += b;
            }
        }
        let needs = self.needs(x) || self.needs(bias);
        Ok(self.push(Op::AddBias(x, bias), out, needs))
    }

    pub fn add(&mut self, a: Var, b: Var) -> Result<Var, AutodiffError> {
        let (av, bv) = (self.value(a), self.value(b));
        if av.shape() != bv.shape() {
            return Err(mismatch("add", format!("{:?} + {:?}", av.shape(), bv.shape())));
        }
        let mut out = av.clone();
        out.add_assign(bv);
        let needs = self.needs(a) || self.needs(b);
        Ok(self.push(Op::Add(a, b), out, needs))
    }

    pub fn activation(&mut self, x: Var, kind: Activation) -> Var {
        let xv = self.value(x);
        let data = xv.data().iter().map(|&v| kind.apply(v)).collect();
        let out = Matrix::from_vec(xv.rows(), xv.cols(), data).expect("same shape");
        let needs = self.needs(x);
        self.push(Op::Activation(x, kind), out, needs)
    }

    /// `[groups * a, b]` → `[groups * b, a]`, transposing each block.
    pub fn transpose_groups(&mut self, x: Var, groups: usize) -> Result<Var, AutodiffError> {
        let xv = self.value(x);
        if groups == 0 || xv.rows() % groups != 0 {
            return Err(mismatch("transpose_groups", format!("{} rows into {groups} groups", xv.rows())));
        }
        let out = transpose_groups(xv, groups);
        let needs = self.needs(x);
        Ok(self.push(Op::TransposeGroups { x, groups }, out, needs))
    }

    pub fn reshape(&mut self, x: Var, rows: usize, cols: usize) -> Result<Var, AutodiffError> {
        let xv = self.value(x);
        if xv.rows() * xv.cols() != rows * cols {
            return Err(mismatch("reshape", format!("{:?} to [{rows}, {cols}]", xv.shape())));
        }
        let out = xv.clone().reshaped(rows, cols);
        let needs = self.needs(x);
        Ok(self.push(Op::Reshape(x), out, needs))
    }

    /// Cuts every row of `x: [rows, len]` into `patches` windows of
    /// `patch` samples taken every `stride` samples. Positions past the end
    /// repeat the last sample. Output is `[rows * patches, patch]`.
    pub fn patchify(
        &mut self,
        x: Var,
        patch: usize,
        stride: usize,
        patches: usize,
    ) -> Result<Var, AutodiffError> {
        let xv = self.value(x);
        let (rows, len) = xv.shape();
        if patch == 0 || stride == 0 || patches == 0 || len == 0 {
            return Err(mismatch("patchify", format!("patch {patch} stride {stride} over length {len}")));
        }
        let mut out = Vec::with_capacity(rows * patches * patch);
        for r in 0..rows {
            let series = xv.row(r);
            for q in 0..patches {
                for t in 0..patch {
                    out.push(series[(q * stride + t).min(len - 1)]);
                }
            }
        }
        let out = Matrix::from_vec(rows * patches, patch, out)?;
        let needs = self.needs(x);
        Ok(self.push(
            Op::Patchify {
                x,
                patch,
                stride,
                patches,
            },
            out,
            needs,
        ))
    }

    /// Sum of all elements as a `[1, 1]` value.
    pub fn sum(&mut self, x: Var) -> Var {
        let total = self.value(x).data().iter().sum();
        let needs = self.needs(x);
        self.push(Op::Sum(x), Matrix::filled(1, 1, total), needs)
    }

    /// `x · W + b` with `W: [in, out]` and `b: [out]` taken from `store`.
    pub fn dense(
        &mut self,
        x: Var,
        store: &ParamStore,
        weight: ParamId,
        bias: ParamId,
    ) -> Result<Var, AutodiffError> {
        let w = self.param(store, weight);
        let b = self.param(store, bias);
        let h = self.matmul(x, w)?;
        self.add_bias(h, b)
    }

    /// Backward sweep from a scalar output seeded with `seed`.
    pub fn backward_scalar(
        &self,
        output: Var,
        seed: f64,
        store: &mut ParamStore,
    ) -> Result<Gradients, AutodiffError> {
        self.backward(output, &Matrix::filled(1, 1, seed), store)
    }

    /// Propagates `seed` (the gradient of the objective with respect to
    /// `output`) back through the tape. Parameter gradients are added to
    /// `Parameter::grad`, so repeated sweeps accumulate.
    pub fn backward(
        &self,
        output: Var,
        seed: &Matrix,
        store: &mut ParamStore,
    ) -> Result<Gradients, AutodiffError> {
        if self.nodes.is_empty() {
            return Err(AutodiffError::EmptyTape);
        }
        if seed.shape() != self.value(output).shape() {
            return Err(mismatch(
                "backward",
                format!("seed {:?} for output {:?}", seed.shape(), self.value(output).shape()),
            ));
        }
        let mut grads: Vec<Option<Matrix>> = vec![None; self.nodes.len()];
        grads[output.0] = Some(seed.clone());

        for idx in (0..=output.0).rev() {
            let node = &self.nodes[idx];
            if !node.needs_grad {
                continue;
            }
            let Some(g) = grads[idx].take() else {
                continue;
            };
            match &node.op {
                // tracked inputs keep their gradient for the caller
                Op::Input => grads[idx] = Some(g),
                Op::Param(id) => {
                    let p = store.get_mut(*id);
                    for (acc, v) in p.grad.iter_mut().zip(g.data()) {
                        *acc += v;
                    }
                }
                Op::MatMul(a, b) => {
                    if self.needs(*a) {
                        let ga = matmul_transpose_right(&g, self.value(*b));
                        accumulate(&mut grads, *a, ga);
                    }
                    if self.needs(*b) {
                        let gb = matmul_transpose_left(self.value(*a), &g);
                        accumulate(&mut grads, *b, gb);
                    }
                }
                Op::AddBias(x, bias) => {
                    if self.needs(*bias) {
                        let mut gb = Matrix::zeros(1, g.cols());
                        for row in g.data().chunks_exact(g.cols()) {
                            for (acc, v) in gb.data_mut().iter_mut().zip(row) {
                                *acc += v;
                            }
                        }
                        accumulate(&mut grads, *bias, gb);
                    }
                    if self.needs(*x) {
                        accumulate(&mut grads, *x, g);
                    }
                }
                Op::Add(a, b) => {
                    if self.needs(*b) {
                        accumulate(&mut grads, *b, g.clone());
                    }
                    if self.needs(*a) {
                        accumulate(&mut grads, *a, g);
                    }
                }
                Op::Activation(x, kind) => {
                    let xv = self.value(*x);
                    let data = g
                        .data()
                        .iter()
                        .zip(xv.data())
                        .map(|(gv, &xv)| gv * kind.derivative(xv))
                        .collect();
                    accumulate(&mut grads, *x, Matrix::from_vec(g.rows(), g.cols(), data)?);
                }
                Op::TransposeGroups { x, groups } => {
                    accumulate(&mut grads, *x, transpose_groups(&g, *groups));
                }
                Op::Reshape(x) => {
                    let (r, c) = self.value(*x).shape();
                    accumulate(&mut grads, *x, g.reshaped(r, c));
                }
                Op::Patchify {
                    x,
                    patch,
                    stride,
                    patches,
                } => {
                    let (rows, len) = self.value(*x).shape();
                    let mut gx = Matrix::zeros(rows, len);
                    let gd = gx.data_mut();
                    for r in 0..rows {
                        for q in 0..*patches {
                            let src = g.row(r * patches + q);
                            for (t, v) in src.iter().enumerate() {
                                gd[r * len + (q * stride + t).min(len - 1)] += v;
                            }
                        }
                    }
                    debug_assert_eq!(g.cols(), *patch);
                    accumulate(&mut grads, *x, gx);
                }
                Op::Sum(x) => {
                    let (r, c) = self.value(*x).shape();
                    accumulate(&mut grads, *x, Matrix::filled(r, c, g.data()[0]));
                }
            }
        }
        Ok(Gradients { grads })
    }
}

fn accumulate(grads: &mut [Option<Matrix>], var: Var, g: Matrix) {
    match &mut grads[var.0] {
        Some(existing) => existing.add_assign(&g),
        slot @ None => *slot = Some(g),
    }
}
