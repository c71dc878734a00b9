"""
Profit, tariffs and the synthetic molding plant
================================================

A walk through the pieces the agents optimise against: what one molding
cycle earns, how the electricity price moves over the day, and how the
setpoints decide cycle time and part quality.
"""

import numpy as np

from moldrl import economics as eco
from moldrl.ga import fitness
from moldrl.plant import PARAM_LOWER, PARAM_NAMES, PARAM_UPPER, simulate_cycle

# Four cavities per shot. A good part sells for $0.20; every cavity costs
# resin, mold wear (dearer above 140 bar) and electricity (three pressure tiers).
for p_max in (130, 138, 142, 150):
    print(p_max, "bar:",
          "mold", eco.mold_cost_per_cavity(p_max),
          "kWh", eco.energy_per_cavity(p_max))

# One cycle with four good parts at 130 bar, off-peak in spring
out = eco.CycleOutcome((True,) * 4, cycle_time=39.0, p_max=130.0)
price = eco.unit_price(eco.Season.SPRING_FALL, eco.TariffTier.OFF_PEAK)
print("cycle profit", eco.cycle_profit(out, price))
# The reward scales it to ten minutes of back-to-back cycles
print("10-minute profit", eco.interval_reward(out, price))

# Time-of-use: winter has an on-peak block in the morning and the evening
for hour in (3, 9, 12, 18, 23):
    tier = eco.classify_tier(eco.Season.WINTER, 60 * hour)
    print(f"winter {hour:02d}:00 ->", tier.name, eco.unit_price(eco.Season.WINTER, tier))

# The plant: the midpoint of every range, in a cool dry shop
mid = (PARAM_LOWER + PARAM_UPPER) / 2
env = np.array([14.0, 14.0, 45.0, 45.0])
res = simulate_cycle(mid, env)
print(dict(zip(PARAM_NAMES, mid.tolist())))
print("cycle time", res.cycle_time, "good cavities", res.good_count, "fill index", round(res.fill_index, 3))

# Fast injection shortens the cycle; low pressure is cheap but risks short shots.
# Sweep the pressure setpoints to see the trade-off directly.
for frac in (0.0, 0.25, 0.5, 0.75, 1.0):
    p = mid.copy()
    p[3:6] = PARAM_LOWER[3:6] + frac * (PARAM_UPPER[3:6] - PARAM_LOWER[3:6])
    r = simulate_cycle(p, env)
    print(f"pressures {p[3]:.0f}-{p[5]:.0f} bar: good {r.good_count}, "
          f"profit/10 min {fitness(p, env, 'spring', 'offpeak'):.3f}")

# Humidity lowers the fill index, so the cheapest good setting moves with the weather
for rh in (35.0, 45.0, 60.0):
    e = np.array([14.0, 14.0, rh, rh])
    cheap = mid.copy()
    cheap[3:6] = PARAM_LOWER[3:6] + 0.25 * (PARAM_UPPER[3:6] - PARAM_LOWER[3:6])
    r = simulate_cycle(cheap, e)
    print(f"{rh:.0f} %RH: fill index {r.fill_index:.3f}, good {r.good_count}")
