use super::AutodiffError;
use crate::tensor::SeriesTensor;

fn check(pred: &[f64], target: &[f64], op: &'static str) -> Result<(), AutodiffError> {
    if pred.len() != target.len() || pred.is_empty() {
        return Err(AutodiffError::ShapeMismatch {
            op,
            detail: format!("{} predictions vs {} targets", pred.len(), target.len()),
        });
    }
    Ok(())
}

/// Mean smooth-L1 (Huber with threshold 1) and its gradient with respect
/// to `pred`.
pub fn smooth_l1(pred: &[f64], target: &[f64]) -> Result<(f64, Vec<f64>), AutodiffError> {
    check(pred, target, "smooth_l1")?;
    let n = pred.len() as f64;
    let mut total = 0.0;
    let grad = pred
        .iter()
        .zip(target)
        .map(|(p, t)| {
            let d = p - t;
            if d.abs() < 1.0 {
                total += 0.5 * d * d;
                d / n
            } else {
                total += d.abs() - 0.5;
                d.signum() / n
            }
        })
        .collect();
    Ok((total / n, grad))
}

pub fn smooth_l1_loss(
    prediction: &SeriesTensor,
    target: &SeriesTensor,
) -> Result<(f64, SeriesTensor), AutodiffError> {
    if prediction.shape() != target.shape() {
        return Err(AutodiffError::ShapeMismatch {
            op: "smooth_l1",
            detail: format!("{:?} vs {:?}", prediction.shape(), target.shape()),
        });
    }
    let (loss, grad) = smooth_l1(prediction.data(), target.data())?;
    let [b, n, t] = prediction.shape();
    let grad = SeriesTensor::from_vec(b, n, t, grad).expect("same shape");
    Ok((loss, grad))
}

/// Mean squared error and its gradient with respect to `pred`.
pub fn mse_loss(pred: &[f64], target: &[f64]) -> Result<(f64, Vec<f64>), AutodiffError> {
    check(pred, target, "mse")?;
    let n = pred.len() as f64;
    let mut total = 0.0;
    let grad = pred
        .iter()
        .zip(target)
        .map(|(p, t)| {
            let d = p - t;
            total += d * d;
            2.0 * d / n
        })
        .collect();
    Ok((total / n, grad))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_and_linear_regions() {
        let (loss, _) = smooth_l1(&[0.5; 6], &[0.0; 6]).unwrap();
        assert_eq!(loss, 0.125);
        let (loss, grad) = smooth_l1(&[2.0; 4], &[0.0; 4]).unwrap();
        assert_eq!(loss, 1.5);
        assert!(grad.iter().all(|&g| g == 0.25));
    }

    #[test]
    fn gradient_matches_finite_differences() {
        let target: Vec<f64> = (0..24).map(|i| (i as f64 * 0.7).sin() * 2.0).collect();
        let pred: Vec<f64> = (0..24).map(|i| (i as f64 * 1.3).cos() * 1.7).collect();
        let (_, grad) = smooth_l1(&pred, &target).unwrap();
        let h = 1e-6;
        for i in 0..pred.len() {
            let mut up = pred.clone();
            let mut down = pred.clone();
            up[i] += h;
            down[i] -= h;
            let fd = (smooth_l1(&up, &target).unwrap().0 - smooth_l1(&down, &target).unwrap().0) / (2.0 * h);
            let rel = (fd - grad[i]).abs() / grad[i].abs().max(fd.abs()).max(1e-8);
            assert!(rel < 1e-5, "element {i}: {} vs {fd}", grad[i]);
        }
    }

    #[test]
    fn shape_mismatch_is_an_error() {
        assert!(smooth_l1(&[1.0, 2.0], &[1.0]).is_err());
        let a = SeriesTensor::zeros(1, 2, 3);
        let b = SeriesTensor::zeros(1, 3, 2);
        assert!(smooth_l1_loss(&a, &b).is_err());
    }
}
