// Copyright 2026 The GameBench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Prompt templates. V1 follows the original game prompts; V2-V5 are
// rephrasings. Placeholders are written {name} and filled by the renderer.

#include "gamebench/detail/prompt_table.hpp"

namespace gamebench::detail {

namespace {

constexpr std::optional<GameKind> kAny = std::nullopt;
constexpr std::optional<GameKind> kGuess = GameKind::kGuessAverage;
constexpr std::optional<GameKind> kBar = GameKind::kElFarolBar;
constexpr std::optional<GameKind> kDollar = GameKind::kDivideDollar;
constexpr std::optional<GameKind> kPgg = GameKind::kPublicGoods;
constexpr std::optional<GameKind> kDiner = GameKind::kDinersDilemma;
constexpr std::optional<GameKind> kAuction = GameKind::kSealedBidAuction;
constexpr std::optional<GameKind> kRoyale = GameKind::kBattleRoyale;
constexpr std::optional<GameKind> kPirate = GameKind::kPirateGame;

constexpr TemplateEntry kTable[] = {
    // ---- shared ----
    {kAny, 1, "header", "Game Results for Round {I}:"},
    {kAny, 1, "echo", "You chose:"},
    {kAny, 1, "start", "Now round {I} starts."},
    {kAny, 2, "header", "The outcomes of the game for Round {I} are as follows:"},
    {kAny, 2, "echo", "Your selection was:"},
    {kAny, 2, "start", "Commencing with round {I}."},
    {kAny, 3, "header", "Results of Round {I} Game:"},
    {kAny, 3, "echo", "You chose:"},
    {kAny, 3, "start", "The commencement of round {I} is now."},
    {kAny, 4, "header", "The outcomes for Round {I} are as follows:"},
    {kAny, 4, "echo", "Your choice was:"},
    {kAny, 4, "start", "The commencement of round {I} is now."},
    {kAny, 5, "header", "Results of the Game for Round {I}:"},
    {kAny, 5, "echo", "Your selection was:"},
    {kAny, 5, "start", "The commencement of round {I} is now."},
    {kAny, 1, "persona", "You are {persona}."},
    {kAny, 1, "cot", "Let's think step by step. Explain your reasoning briefly, then give your answer in the requested JSON format."},
    {kAny, 1, "informed_equilibrium", "The other players are smart and will always play the Nash equilibrium of this game."},
    {kAny, 1, "informed_smart", "The other players are smart."},
    {kAny, 1, "informed_random", "The other players are stupid and will choose their actions at random."},
    {kAny, 1, "correction", "Your previous reply could not be used ({reason}). Reply again with only the JSON object in the requested format."},

    // ---- Guess 2/3 of the Average ----
    {kGuess, 1, "system", R"t(You are participating in a game played by {N} players over {K} rounds.

Game Rules:

1. Each player selects an integer number between {MIN} and {MAX}, inclusive.
2. After all selections are made, the average of all chosen numbers is calculated.
3. The target number is {R} of this average.
4. The winner is the player(s) who selected a number closest to the target number.)t"},
    {kGuess, 1, "average", "Average Number Chosen: {M}"},
    {kGuess, 1, "target", "Target Number ({R} of Average): {T}"},
    {kGuess, 1, "winning", "Winning Number: {W}"},
    {kGuess, 1, "won", "Congratulation you won."},
    {kGuess, 1, "lost", "Unfortunately you lost."},
    {kGuess, 1, "goal", "Your goal is to choose a number that you believe will be closest to {R} of the average of all numbers chosen by players, including your selection."},
    {kGuess, 1, "format", R"t(Please provide your chosen number in the following JSON format:
{"chosen_number": "integer_between_{MIN}_and_{MAX}"}.)t"},

    {kGuess, 2, "system", R"t(You're participating in a game involving {N} participants and it spans across {K} rounds.

The rules of the game are as follows:

1. Every participant must choose an integer within the range of {MIN} to {MAX}, both included.
2. Once everyone has chosen their numbers, the mean of all these numbers is computed.
3. The goal number becomes {R} times this average.
4. The person or people who picked a number closest to the goal number are declared the winners.)t"},
    {kGuess, 2, "average", "The average number selected was {M}"},
    {kGuess, 2, "target", "The target number, which is {R} of the average, is {T}"},
    {kGuess, 2, "winning", "The number that won was {W}."},
    {kGuess, 2, "goal", "Your target should be to select a number that in your opinion will align most closely with {R} of the total average of all the player's numbers selected, your choice included."},

    {kGuess, 3, "system", R"t(You're engaged in a game, involving {N} participants across {K} rounds.

Rules of the Game:

1. An integer number is chosen by every player, within the range of {MIN} and {MAX}, both numbers included.
2. Once each player has chosen, the average is determined from all the selected numbers.
3. The average is multiplied by {R} to find the target number.
4. The individual or individuals whose chosen number is nearest to the target number are declared the winners.)t"},
    {kGuess, 3, "average", "Chosen number's average: {M}"},
    {kGuess, 3, "target", "The target percentage ({R} of average) is: {T}"},
    {kGuess, 3, "winning", "The winning number is: {W}."},
    {kGuess, 3, "goal", "The objective is to select a number that you think will be nearest to {R} times the average of all the digits chosen by the participants, your choice included."},

    {kGuess, 4, "system", R"t(You're involved in a game which brings {N} participants together for {K} rounds.

The guidelines of the game are as follows:

1. All players have to pick a whole number anywhere from {MIN} to {MAX}, both numbers included.
2. The chosen numbers are then gathered and their mean is computed.
3. The number to aim for, or the target number, is {R} of the calculated average.
4. The victorious player(s) are those whose chosen number is closest to the target number.)t"},
    {kGuess, 4, "average", "The average number selected was {M}. The target number, which is {R} times the average, was {T}. The triumphant number was {W}."},
    {kGuess, 4, "target", ""},
    {kGuess, 4, "winning", ""},
    {kGuess, 4, "goal", "You are tasked with selecting a number that, in your estimation, will be as close as possible to {R} times the average of numbers chosen by all players, your own choice included."},

    {kGuess, 5, "system", R"t(You will be engaging in a game that is played over {K} rounds and includes a total of {N} players.

The Instructions of the Game:

1. Every player is supposed to pick an integer that is within the range of {MIN} and {MAX}, both numbers inclusive.
2. The median of all the numbers chosen by the players is then determined after all choices have been made.
3. The number that players are aiming for is {R} times the calculated average.
4. The player or players who opt for the number closest to this target are declared the winners.)t"},
    {kGuess, 5, "average", "The chosen average number is: {M}"},
    {kGuess, 5, "target", "The target number ({R} of Average) is: {T}"},
    {kGuess, 5, "winning", "The number that won: {W}."},
    {kGuess, 5, "goal", "You are challenged to select a number which you conjecture will be nearest to {R} times the mean of all numbers picked by the players, inclusive of your own choice."},

    // ---- El Farol Bar ----
    {kBar, 1, "system", R"t(You are participating in a game played by {N} players over {K} rounds.

Game Rules:

1. Every round, you and the other players decide independently whether to go to a bar.
2. If equal to or less than {R} of the players go to the bar, everyone who goes has more fun than staying home, receiving a utility of {MAX}.
3. If more than {R} of the players go to the bar, everyone who goes has less fun than staying home, receiving a utility of {MIN}.
4. Everyone who stays home receives a utility of {HOME}.)t"},
    {kBar, 1, "attendance", "{go} players went to the bar, while {stay} players stayed home. {go}/{N}, which is {compare} than {R} of the players went to the bar."},
    {kBar, 1, "compare_more", "more"},
    {kBar, 1, "compare_le", "equal to or less"},
    {kBar, 1, "fun_less", "It was less fun to go to the bar this round."},
    {kBar, 1, "fun_more", "It was more fun to go to the bar this round."},
    {kBar, 1, "gained", "You gained {gain}."},
    {kBar, 1, "goal", "Your goal is to maximize your fun. Choose to go to the bar when you predict fewer than {R} of the players will go, and choose to stay home otherwise."},
    {kBar, 1, "format", R"t(Please provide your decision in the following JSON format:
{"decision": "go_or_stay"}.)t"},

    {kBar, 2, "system", R"t(You're taking part in a game with {N} participants that lasts {K} rounds.

The rules of the game are as follows:

1. In every round, each participant independently decides whether to visit a bar.
2. When at most {R} of the participants visit the bar, every visitor enjoys it more than staying at home and gets a utility of {MAX}.
3. When over {R} of the participants visit the bar, every visitor enjoys it less than staying at home and gets a utility of {MIN}.
4. Every participant who stays at home gets a utility of {HOME}.)t"},
    {kBar, 2, "goal", "Your target should be to get as much fun as you can. Visit the bar when you expect fewer than {R} of the participants to go, and stay at home otherwise."},
    {kBar, 3, "system", R"t(You're engaged in a game involving {N} participants across {K} rounds.

Rules of the Game:

1. Each round, every player privately decides to either go to a bar or stay at home.
2. If no more than {R} of the players go, the bar is pleasant and each player there receives a utility of {MAX}.
3. If more than {R} of the players go, the bar is crowded and each player there receives a utility of {MIN}.
4. A player who stays at home receives a utility of {HOME}.)t"},
    {kBar, 3, "goal", "The objective is to enjoy yourself as much as possible: go to the bar if you think fewer than {R} of the players will be there, and stay at home if not."},
    {kBar, 4, "system", R"t(You're involved in a game which brings {N} participants together for {K} rounds.

The guidelines of the game are as follows:

1. Each round, all players choose on their own whether they will head to a bar.
2. Should {R} of the players or fewer head to the bar, those who went have a better time than at home, with a utility of {MAX}.
3. Should more than {R} of the players head to the bar, those who went have a worse time than at home, with a utility of {MIN}.
4. Those who remain at home obtain a utility of {HOME}.)t"},
    {kBar, 4, "goal", "You are tasked with maximizing your enjoyment. Head to the bar when you estimate that fewer than {R} of the players will go, and remain at home otherwise."},
    {kBar, 5, "system", R"t(You will be engaging in a game that is played over {K} rounds and includes a total of {N} players.

The Instructions of the Game:

1. In each round, every player independently picks between going to a bar and staying home.
2. If the share of players at the bar does not exceed {R}, each of them has a good time and earns a utility of {MAX}.
3. If the share of players at the bar exceeds {R}, each of them has a bad time and earns a utility of {MIN}.
4. Each player who stays home earns a utility of {HOME}.)t"},
    {kBar, 5, "goal", "You are challenged to have as much fun as possible. Go to the bar when you conjecture that fewer than {R} of the players will go; otherwise stay home."},

    // ---- Divide the Dollar ----
    {kDollar, 1, "system", R"t(You are participating in a game played by {N} players over {K} rounds.

Game Rules:

1. You are dividing {G} golds. Each player independently proposes a bid.
2. If the sum of all bids does not exceed {G}, each player receives their bid amount.
3. If the sum exceeds {G}, all players receive nothing.)t"},
    {kDollar, 1, "echo", "Your bid amount was:"},
    {kDollar, 1, "sum", "The sum of all bids was {S}."},
    {kDollar, 1, "within", "The sum does not exceed {G}."},
    {kDollar, 1, "exceeds", "The sum exceeds {G}."},
    {kDollar, 1, "received", "You received {gain} golds."},
    {kDollar, 1, "goal", "Your goal is to maximize your individual gain without causing the total sum of bids to exceed {G} golds."},
    {kDollar, 1, "format", R"t(Please provide your bid amount in the following JSON format:
{"bid_amount": "integer_between_0_and_{G}"}.)t"},

    {kDollar, 2, "system", R"t(You're participating in a game involving {N} participants and it spans across {K} rounds.

The rules of the game are as follows:

1. The participants are splitting {G} golds, and each one submits a bid without seeing the others.
2. If the bids add up to no more than {G}, every participant is paid their own bid.
3. If the bids add up to more than {G}, nobody is paid anything.)t"},
    {kDollar, 2, "goal", "Your target should be to earn as much as you can for yourself while keeping the total of all bids within {G} golds."},
    {kDollar, 3, "system", R"t(You're engaged in a game, involving {N} participants across {K} rounds.

Rules of the Game:

1. A pot of {G} golds is to be shared, and each player privately names a bid.
2. When the total of the bids is at most {G}, each player gets exactly what they bid.
3. When the total of the bids is above {G}, every player gets zero.)t"},
    {kDollar, 3, "goal", "The objective is to collect as many golds as you can without the combined bids going over {G} golds."},
    {kDollar, 4, "system", R"t(You're involved in a game which brings {N} participants together for {K} rounds.

The guidelines of the game are as follows:

1. The group divides {G} golds; each player puts forward a bid independently.
2. Provided the bids total {G} or less, all players obtain the amount they bid.
3. Provided the bids total more than {G}, no player obtains anything.)t"},
    {kDollar, 4, "goal", "You are tasked with maximizing your own golds while making sure the sum of all bids stays at or below {G} golds."},
    {kDollar, 5, "system", R"t(You will be engaging in a game that is played over {K} rounds and includes a total of {N} players.

The Instructions of the Game:

1. The players share {G} golds, and every player independently makes a bid.
2. Should the bids sum to {G} or less, each player is awarded their bid.
3. Should the bids sum to more than {G}, each player is awarded nothing.)t"},
    {kDollar, 5, "goal", "You are challenged to win as many golds as possible for yourself without letting the bids of all players add up to more than {G} golds."},

    // ---- Public Goods Game ----
    {kPgg, 1, "system", R"t(You are participating in a game played by {N} players over {K} rounds.

Game Rules:

1. In each round, you, as a player, must decide how many of your private tokens you wish to contribute secretly to the public pot.
2. The total tokens in this pot will be multiplied by the factor {R} to create the "public good" payoff.
3. This payoff will then be evenly divided among all players, regardless of their individual contribution.
4. Any tokens you do not contribute will be retained in your private collection.)t"},
    {kPgg, 1, "contributions", "Contributed tokens of each player: {contributions}"},
    {kPgg, 1, "echo", "You contributed:"},
    {kPgg, 1, "pot", "Tokens in the public pot: {S}"},
    {kPgg, 1, "gain", "Your gain: {gain}"},
    {kPgg, 1, "tokens_after", "Your tokens after round {I}: {balance}"},
    {kPgg, 1, "all_tokens", "Tokens of each player after round {I}: {balances}"},
    {kPgg, 1, "goal", "Your goal is to maximize your total token count by the end of the game. Currently you have {balance} tokens. You need to decide the number of tokens to be contributed to the public pot."},
    {kPgg, 1, "format", R"t(Please provide the number of tokens in the following JSON format:
{"tokens_contributed": "integer_between_0_and_{cap}"})t"},

    {kPgg, 2, "system", R"t(You're participating in a game involving {N} participants and it spans across {K} rounds.

The rules of the game are as follows:

1. Every round, each participant secretly chooses how many of their own tokens to put into a shared pot.
2. The pot is multiplied by {R} to form the "public good".
3. The public good is split equally among all participants, whatever each one put in.
4. Tokens you keep back stay in your own collection.)t"},
    {kPgg, 2, "goal", "Your target should be to end the game with as many tokens as possible. You currently hold {balance} tokens. Decide how many tokens to put into the shared pot."},
    {kPgg, 3, "system", R"t(You're engaged in a game, involving {N} participants across {K} rounds.

Rules of the Game:

1. Each round, every player privately decides how many of their tokens go into a common pot.
2. The common pot is then multiplied by {R}, producing the "public good".
3. The public good is shared equally by all players, no matter how much each contributed.
4. Any tokens not placed in the pot remain with their owner.)t"},
    {kPgg, 3, "goal", "The objective is to hold the largest possible number of tokens when the game ends. Right now you have {balance} tokens. Choose how many tokens to place in the common pot."},
    {kPgg, 4, "system", R"t(You're involved in a game which brings {N} participants together for {K} rounds.

The guidelines of the game are as follows:

1. In every round, players secretly decide what part of their private tokens to donate to a public pot.
2. The donations in the pot are multiplied by {R} to make the "public good".
3. The public good is divided evenly among all the players, independent of what each donated.
4. Tokens that are not donated are kept by the player.)t"},
    {kPgg, 4, "goal", "You are tasked with maximizing your token total by the end of the game. You now own {balance} tokens. Decide how many tokens to donate to the public pot."},
    {kPgg, 5, "system", R"t(You will be engaging in a game that is played over {K} rounds and includes a total of {N} players.

The Instructions of the Game:

1. Each round, every player secretly selects how many of their tokens to contribute to a public pot.
2. The public pot is multiplied by {R} to create the "public good".
3. The public good is then shared out equally among all players regardless of contribution.
4. Tokens a player does not contribute remain in that player's private stock.)t"},
    {kPgg, 5, "goal", "You are challenged to finish with the largest token count you can. At the moment you have {balance} tokens. Select the number of tokens to contribute to the public pot."},

    // ---- Diner's Dilemma ----
    {kDiner, 1, "system", R"t(You are participating in a game played by {N} players over {K} rounds.

Game Rules:

1. Each player must choose to order either a costly dish or a cheap dish.
2. The price of the costly dish is {Ph}. The price of the cheap dish is {Pl}.
3. The costly dish brings you a utility of {Uh}. The cheap dish brings you a utility of {Ul}.
4. The costly dish is tastier than the cheap dish, but not sufficiently to justify its price when dining alone.
5. At the end of each round, the total cost of all dishes ordered is split equally among all players.)t"},
    {kDiner, 1, "counts", "{costly} people chose the costly dish, while {cheap} chose the cheap dish."},
    {kDiner, 1, "cost", "The total cost is {S}. You need to pay {share}."},
    {kDiner, 1, "utility", "Your utility is {utility}."},
    {kDiner, 1, "goal", "Your goal is to maximize your overall satisfaction, balancing the quality of the dish and the cost shared."},
    {kDiner, 1, "format", R"t(Please provide your chosen dish in the following JSON format:
{"chosen_dish": "costly_or_cheap"})t"},

    {kDiner, 2, "system", R"t(You're participating in a game involving {N} participants and it spans across {K} rounds.

The rules of the game are as follows:

1. Every participant orders either an expensive dish or an inexpensive dish.
2. The expensive dish costs {Ph} and the inexpensive dish costs {Pl}.
3. The expensive dish gives a utility of {Uh} and the inexpensive dish gives a utility of {Ul}.
4. The expensive dish tastes better, but not by enough to be worth its price if you paid for it alone.
5. After each round, the bill for all dishes is shared equally by all participants.)t"},
    {kDiner, 2, "goal", "Your target should be to get the most satisfaction, weighing how good your dish is against your share of the bill."},
    {kDiner, 3, "system", R"t(You're engaged in a game, involving {N} participants across {K} rounds.

Rules of the Game:

1. Each player orders one dish, either the costly one or the cheap one.
2. The costly dish is priced at {Ph}; the cheap dish is priced at {Pl}.
3. Eating the costly dish yields a utility of {Uh}; eating the cheap dish yields a utility of {Ul}.
4. The costly dish is better, though not so much better that it would be worth paying for on your own.
5. When the round ends, the combined price of every dish ordered is divided equally among the players.)t"},
    {kDiner, 3, "goal", "The objective is to be as satisfied as possible, taking into account both the dish you get and the share of the bill you pay."},
    {kDiner, 4, "system", R"t(You're involved in a game which brings {N} participants together for {K} rounds.

The guidelines of the game are as follows:

1. All players have to order a dish, picking the costly dish or the cheap dish.
2. A costly dish is {Ph}, while a cheap dish is {Pl}.
3. A costly dish provides a utility of {Uh}, while a cheap dish provides a utility of {Ul}.
4. The costly dish is more delicious, yet for a lone diner it would not be worth the extra cost.
5. The total of all orders in a round is divided into equal shares paid by every player.)t"},
    {kDiner, 4, "goal", "You are tasked with maximizing your satisfaction by trading off the quality of your dish against the bill you share."},
    {kDiner, 5, "system", R"t(You will be engaging in a game that is played over {K} rounds and includes a total of {N} players.

The Instructions of the Game:

1. Every player orders either the costly dish or the cheap dish.
2. The costly dish has a price of {Ph}, and the cheap dish has a price of {Pl}.
3. The costly dish gives {Uh} utility, and the cheap dish gives {Ul} utility.
4. The costly dish tastes better but would not justify its price for someone dining by themselves.
5. Each round, the total bill for the table is split evenly among all players.)t"},
    {kDiner, 5, "goal", "You are challenged to reach the greatest overall satisfaction, balancing the dish you enjoy against the cost you share."},

    // ---- Sealed-Bid Auction ----
    {kAuction, 1, "system", R"t(You are participating in a game played by {N} players over {K} rounds.

Game Rules:

1. Each player has a private valuation for the item in each round.
2. Without knowing the bids and valuations of other players, each player submits a written bid for the item.
3. The highest bidder wins the item and pays the price of the {price_rule} bid.
4. If you win, your utility for that round is your valuation minus the price paid. If you lose, your utility is zero.)t"},
    {kAuction, 1, "price_first", "highest"},
    {kAuction, 1, "price_second", "second highest"},
    {kAuction, 1, "valuation", "Your valuation for this round's item was {v}."},
    {kAuction, 1, "echo", "Your bid was:"},
    {kAuction, 1, "winning_bid", "The winning bid was: {W}."},
    {kAuction, 1, "price", "The price paid was: {P}."},
    {kAuction, 1, "won", "You won. Your utility is {utility}."},
    {kAuction, 1, "lost", "You lost. Your utility is 0."},
    {kAuction, 1, "goal", "Your goal is to maximize your total utility. Your valuation for this round's item is {v}."},
    {kAuction, 1, "format", R"t(Please provide your bid in the following JSON format:
{"bid": "integer_between_0_and_{v}"})t"},

    {kAuction, 2, "system", R"t(You're participating in a game involving {N} participants and it spans across {K} rounds.

The rules of the game are as follows:

1. In every round, each participant privately values the item on offer.
2. Each participant hands in a sealed bid without seeing anyone else's bid or valuation.
3. The top bidder gets the item and pays the {price_rule} bid.
4. A winner's utility is their valuation minus the price paid; everyone else gets a utility of zero.)t"},
    {kAuction, 2, "goal", "Your target should be to collect as much utility as possible. This round you value the item at {v}."},
    {kAuction, 3, "system", R"t(You're engaged in a game, involving {N} participants across {K} rounds.

Rules of the Game:

1. Every round, each player holds a private value for the item being sold.
2. Players submit written bids without knowing anything about the others' bids or values.
3. The item goes to the highest bid, and the winner pays the {price_rule} bid.
4. Winning gives a utility equal to your value minus the price; losing gives a utility of zero.)t"},
    {kAuction, 3, "goal", "The objective is to obtain the greatest total utility. Your value for the item in this round is {v}."},
    {kAuction, 4, "system", R"t(You're involved in a game which brings {N} participants together for {K} rounds.

The guidelines of the game are as follows:

1. For each round, every player has a personal valuation of the item.
2. All players place one sealed bid, unaware of the bids and valuations of the rest.
3. Whoever bids highest takes the item and is charged the {price_rule} bid.
4. The winner's utility equals their valuation less the price; the others receive zero utility.)t"},
    {kAuction, 4, "goal", "You are tasked with maximizing your overall utility. For this round your valuation of the item is {v}."},
    {kAuction, 5, "system", R"t(You will be engaging in a game that is played over {K} rounds and includes a total of {N} players.

The Instructions of the Game:

1. Each round, each player privately values the auctioned item.
2. Every player secretly submits a bid, with no knowledge of the other players' bids or valuations.
3. The player with the highest bid wins the item and pays the {price_rule} bid.
4. The winner gains their valuation minus the price; any other player gains nothing.)t"},
    {kAuction, 5, "goal", "You are challenged to gather the most utility you can. Your valuation of this round's item is {v}."},

    // ---- Battle Royale ----
    {kRoyale, 1, "system", R"t(You are participating in a game played by {N} players.

Game Rules:

1. You are in a survival game where only one can survive and win.
2. Players take turns shooting at others in a predetermined order based on their hit rates, from the lowest to the highest.
3. Players' names and hit rates ranked by shooting order are {hit_rates}. You are {name}. Your hit rate is {hit}. You are the {rank} to shoot.
4. You have an unlimited number of bullets.
5. You may choose to intentionally miss your shot on your turn.)t"},
    {kRoyale, 1, "echo", "Your action:"},
    {kRoyale, 1, "intentional", "{actor} intentionally missed the shot."},
    {kRoyale, 1, "hit", "{actor} shot at {target} and hit."},
    {kRoyale, 1, "missed", "{actor} shot at {target} but missed."},
    {kRoyale, 1, "left", "There are {left} players left."},
    {kRoyale, 1, "goal", "Your goal is to eliminate other players to survive until the end and win the game. The remaining players' names and hit rates ranked by shooting order are: {hit_rates}. You are {name}. Your hit rate is {hit}. You are the {rank} to shoot. Please decide whether to shoot at a player or intentionally miss."},
    {kRoyale, 1, "format", R"t(Please provide your action in the following JSON format:
{"target": "playerID_or_null"})t"},

    {kRoyale, 2, "system", R"t(You're participating in a game involving {N} participants.

The rules of the game are as follows:

1. This is a survival game: only one participant can survive and win.
2. Participants shoot at each other in turns, in a fixed order from the lowest hit rate to the highest.
3. The participants and their hit rates in shooting order are {hit_rates}. You are {name}, your hit rate is {hit}, and you are the {rank} to shoot.
4. Your bullets never run out.
5. On your turn you may deliberately miss.)t"},
    {kRoyale, 2, "goal", "Your target should be to knock out the other participants and be the last one standing. The participants still in the game and their hit rates in shooting order are: {hit_rates}. You are {name}, your hit rate is {hit}, and you are the {rank} to shoot. Decide whether to shoot at someone or deliberately miss."},
    {kRoyale, 3, "system", R"t(You're engaged in a game, involving {N} participants.

Rules of the Game:

1. It is a survival game, and the single survivor wins.
2. Turns to shoot follow a set order by hit rate, lowest first and highest last.
3. In shooting order, the players and their hit rates are {hit_rates}. You are {name} with a hit rate of {hit}, and you are the {rank} to shoot.
4. You have as many bullets as you need.
5. You are allowed to miss on purpose when it is your turn.)t"},
    {kRoyale, 3, "goal", "The objective is to eliminate the others and be the one who survives. In shooting order, the players left and their hit rates are: {hit_rates}. You are {name} with a hit rate of {hit}, and you are the {rank} to shoot. Choose whether to shoot at a player or to miss on purpose."},
    {kRoyale, 4, "system", R"t(You're involved in a game which brings {N} participants together.

The guidelines of the game are as follows:

1. The game is about survival; only one player can be the survivor and winner.
2. Players shoot one at a time in a predetermined order, going from the lowest hit rate to the highest.
3. Ordered by shooting turn, the players and hit rates are {hit_rates}. You are {name}. Your hit rate is {hit}. You shoot {rank}.
4. Your supply of bullets is unlimited.
5. You can intentionally miss when your turn comes.)t"},
    {kRoyale, 4, "goal", "You are tasked with eliminating the other players so that you survive to the end. Ordered by shooting turn, the remaining players and hit rates are: {hit_rates}. You are {name}. Your hit rate is {hit}. You shoot {rank}. Decide whether to fire at a player or intentionally miss."},
    {kRoyale, 5, "system", R"t(You will be engaging in a game that includes a total of {N} players.

The Instructions of the Game:

1. Only one player can survive this game, and that player wins.
2. Players shoot in turns, ordered by hit rate from lowest to highest.
3. Listed in shooting order, the players' names and hit rates are {hit_rates}. You are {name}, with a hit rate of {hit}; you are the {rank} to shoot.
4. There is no limit on your bullets.
5. You may purposely miss on your turn.)t"},
    {kRoyale, 5, "goal", "You are challenged to take out the other players and survive until the game ends. Listed in shooting order, the players remaining and their hit rates are: {hit_rates}. You are {name}, with a hit rate of {hit}; you are the {rank} to shoot. Decide whether to shoot at a player or purposely miss."},

    // ---- Pirate Game ----
    {kPirate, 1, "system", R"t(You are participating in a game played by {N} players.

Game Rules:

1. You are pirates who have found {G} gold coins. You are deciding how to distribute these coins among yourselves.
2. The pirates will make decisions in strict order of seniority. You are the {rank} most senior pirate.
3. The most senior pirate proposes a plan to distribute the {G} gold coins.
4. All pirates, including the proposer, vote on the proposed distribution.
5. If the majority accepts the plan, each pirate receives the gold coins as the most senior pirate proposed.
6. If the majority rejects the plan, the proposer is thrown overboard, and the next senior pirate proposes a new plan.
7. The game ends when a plan is accepted or only one pirate remains.)t"},
    {kPirate, 1, "proposed", "The {proposer} most senior pirate proposed a plan of {plan}."},
    {kPirate, 1, "accepts", "{accepts} of {alive} pirates chose to accept the distribution."},
    {kPirate, 1, "proposer_echo", "You proposed:"},
    {kPirate, 1, "rejected", R"t(Less than half of the pirates accepted the plan.
The {proposer} most senior pirate was thrown overboard and eliminated from the game. The game continues.)t"},
    {kPirate, 1, "accepted", R"t(At least half of the pirates accepted the plan.
The gold coins are distributed as proposed and the game ends.)t"},
    {kPirate, 1, "propose_call", "Now the {proposer} most senior pirate needs to propose a plan."},
    {kPirate, 1, "goal", "Your primary goal is to survive. If you survive, your next goal is to maximize the number of gold coins you receive. You may also prefer to throw another pirate overboard if it does not negatively impact your other goals."},
    {kPirate, 1, "voter_request", "The proposed plan is {plan}. You will get {offered} golds from this plan."},
    {kPirate, 1, "voter_format", R"t(Please provide your decision on the current proposal in the following JSON format:
{"decision": "accept_or_reject"})t"},
    {kPirate, 1, "proposer_request", "You need to propose a plan to divide {G} golds. The proposed numbers must be all non-negative integers and sum up to {G}."},
    {kPirate, 1, "proposer_format", R"t(Please provide your proposal of the golds distributed to each pirate from you to the {last} most senior in the following JSON format:
{"proposal": {plan_schema}})t"},

    {kPirate, 2, "system", R"t(You're participating in a game involving {N} participants.

The rules of the game are as follows:

1. You and the others are pirates who found {G} gold coins and must agree on how to share them.
2. Decisions follow strict seniority. You are the {rank} most senior pirate.
3. The most senior pirate puts forward a plan for sharing the {G} gold coins.
4. Every pirate, the proposer included, votes on the plan.
5. If at least half of the votes accept the plan, the coins are shared exactly as proposed.
6. Otherwise the proposer is thrown overboard and the next most senior pirate makes a new plan.
7. The game is over once a plan is accepted or a single pirate is left.)t"},
    {kPirate, 2, "goal", "Your first priority is staying alive. Once you are safe, you want as many gold coins as possible. If it costs you nothing on those two goals, you would also like to see another pirate thrown overboard."},
    {kPirate, 3, "system", R"t(You're engaged in a game, involving {N} participants.

Rules of the Game:

1. A crew of pirates has found {G} gold coins and has to decide how to split them.
2. Pirates act in strict seniority order. You are the {rank} most senior pirate.
3. The most senior pirate suggests how to split the {G} gold coins.
4. All pirates vote on the suggestion, including the one who made it.
5. With at least half of the votes in favour, the split happens as suggested.
6. Without that support, the suggester is thrown overboard and the next most senior pirate makes a suggestion.
7. The game stops when a suggestion passes or only one pirate is left.)t"},
    {kPirate, 3, "goal", "The objective is, first, to survive; second, to get the largest number of gold coins; and third, where it does not hurt the first two, to see other pirates thrown overboard."},
    {kPirate, 4, "system", R"t(You're involved in a game which brings {N} participants together.

The guidelines of the game are as follows:

1. The players are pirates deciding how to divide {G} gold coins they have discovered.
2. Seniority fixes the order of decisions. You are the {rank} most senior pirate.
3. The most senior pirate proposes a division of the {G} gold coins.
4. Each pirate, proposer included, casts a vote on the division.
5. If half or more of the votes accept, every pirate receives the coins the proposal assigns.
6. If not, the proposer goes overboard and the next most senior pirate proposes instead.
7. The game finishes once a proposal is accepted or just one pirate remains.)t"},
    {kPirate, 4, "goal", "You are tasked, above all, with surviving. Given survival, maximize your gold coins. You also like to throw other pirates overboard when doing so does not harm those aims."},
    {kPirate, 5, "system", R"t(You will be engaging in a game that includes a total of {N} players.

The Instructions of the Game:

1. The players are pirates who must share {G} gold coins they discovered.
2. The pirates decide in strict order of seniority. You are the {rank} most senior pirate.
3. The most senior pirate offers a plan for dividing the {G} gold coins.
4. All pirates, the one offering included, vote on the plan.
5. When half of the votes or more are in favour, the coins are handed out according to the plan.
6. Otherwise the pirate who offered the plan is thrown overboard and the next most senior pirate offers a plan.
7. The game ends when a plan passes or when only one pirate is left.)t"},
    {kPirate, 5, "goal", "You are challenged to survive first. If you survive, gather as many gold coins as you can. You may also want to throw other pirates overboard when it does not hurt your other goals."},
};

}  // namespace

std::span<const TemplateEntry> TemplateTable() { return kTable; }

}  // namespace gamebench::detail
