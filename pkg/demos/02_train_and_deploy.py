"""
Training a PPO agent and running it for a day
==============================================

A small PPO run on randomised training days, followed by a 24-hour
deployment in each season. With the reduced networks and 30,000 steps
this takes a couple of minutes on one core; pass a smaller step count on
the command line for a quicker look.
"""

import sys

import numpy as np

from moldrl.deploy import deploy_day
from moldrl.env import MoldingEnv, make_training_scenario
from moldrl.experiments import DESK_SCALE, train_agent

steps = int(sys.argv[1]) if len(sys.argv) > 1 else DESK_SCALE["total_steps"]

# Every episode is one day of 144 ten-minute decisions. The state holds the
# normalised setpoints, the shop conditions and a season/tariff one-hot.
env = MoldingEnv(seed=0)
s = env.reset(make_training_scenario(0))
print("state", s.shape, "first setpoints", np.round(s[:10], 2))


def show(row):
    if row["episode"] % 25 == 0:
        print(f"episode {row['episode']:4d}  reward/step {row['mean_reward']:.3f}  "
              f"defects {row['defects']}")


agent = train_agent("ppo", seed=0, overrides={**DESK_SCALE, "total_steps": steps}, progress=show)
print(f"trained in {agent.wall_clock:.0f} s")

# Deployment: before every cycle the policy makes k deterministic adjustments
# from the previous setpoints, then one shot is molded.
for season in ("spring", "winter", "summer"):
    day = deploy_day(agent, season)
    print(f"{season:7s} profit {day.total_profit:8.2f}  cycles {day.cycles}  "
          f"defective {day.defective}  policy time {day.opt_seconds:.2f} s")

# The last cycle's setpoints
last = day.rows[-1]
print({k: round(last[k], 2) for k in ("v1", "v2", "v3", "P1", "P2", "P3", "x1", "x2", "x3", "h")})
