"""Simulate one noise-free and one noisy phantom, extract TACs and fit the one-tissue model.

    python3 demos/kinetics_walkthrough.py
"""

from dynpet import kinetics, phantom, preprocess


def fit(study, masks):
    tacs = preprocess.extract_tacs(study, masks)
    return kinetics.fit_compartment(tacs.myo, tacs.lvbp, kinetics.fit_weights(study),
                                    study.frame_start_times, study.frame_durations)


def main():
    for noise in (0.0, 0.3):
        spec = phantom.PhantomSpec(noise_level=noise, K1=0.7, k2=0.25, blood_fraction=0.06, seed=1)
        study, masks, truth = phantom.simulate_study(spec)
        sel = preprocess.select_frames(preprocess.extract_tacs(study, masks))
        f = fit(study, masks)
        print(f"noise {noise}: EQ frame {sel.eq_index}, pre-EQ {sel.pre_eq}")
        print(f"  true K1 {truth.K1:.3f} MBF {truth.mbf:.3f} | fitted K1 {f.K1:.3f} k2 {f.k2:.3f} "
              f"v {f.v:.3f} MBF {f.mbf:.3f} (fitting error {f.weighted_residual:.3g})")


if __name__ == "__main__":
    main()
