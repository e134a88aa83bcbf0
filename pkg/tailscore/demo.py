from importlib.resources import files

_data = files('tailscore') / 'data'

#: Uniform distribution on {1, 2, 3, 4} as a sample, column ``y``.
u4_sample_file = str(_data / 'u4_sample.csv')

#: Forecasts (v, x) = (2, 3.5) of (VaR_0.5, ES_0.5) for the U4 sample.
u4_forecasts_file = str(_data / 'u4_forecasts.csv')

#: The forecast (2.5, 2.5), the mean reported for both components.
u4_forecasts_naive_file = str(_data / 'u4_forecasts_naive.csv')

fz_family_file = str(_data / 'fz_family.json')
