# Desk corpus: real paper titles paired with short hand-written summaries
# of each paper's contribution. Regenerate desk_corpus.jsonl with
#   python3 data/src/desk_records.py > data/desk_corpus.jsonl
import json

RECORDS = [
("stachniss05", "Mobile Robot Mapping and Localization in Non-Static Environments", "AAAI", 2005,
 "Whenever mobile robots act in the real world, they need to deal with non-static objects such as people, doors, furniture, and parked vehicles that change the appearance of the environment over time. "
 "Most existing approaches to mapping and localization assume a static world, which leads to inconsistent maps and degraded pose estimates in environments whose configuration changes between visits. "
 "In this paper we present an approach that learns typical configurations of the environment by clustering local grid maps recorded at different points in time. "
 "We then integrate these learned configurations into a particle filter so that a mobile robot can simultaneously estimate its pose and the current state of the non-static parts of the environment. "
 "Experiments with real robot data show that our approach yields more accurate localization and better maps than methods that treat the changing objects as noise."),
("vaswani17", "Attention Is All You Need", "NeurIPS", 2017,
 "The dominant sequence transduction models are based on complex recurrent or convolutional neural networks that include an encoder and a decoder connected through an attention mechanism. "
 "We propose a new simple network architecture, the Transformer, which is based solely on attention mechanisms and dispenses with recurrence and convolutions entirely. "
 "Experiments on two machine translation tasks show that these models are superior in quality while being more parallelizable and requiring significantly less time to train than previous architectures. "
 "We also show that the Transformer generalizes well to other tasks by applying it successfully to English constituency parsing with both large and limited training data."),
("he16", "Deep Residual Learning for Image Recognition", "CVPR", 2016,
 "Deeper neural networks are more difficult to train because optimization degrades as layers are stacked, even when the additional layers could in principle represent the identity mapping. "
 "We present a residual learning framework that eases the training of networks that are substantially deeper than those used previously by reformulating layers as learning residual functions. "
 "We provide comprehensive empirical evidence showing that these residual networks are easier to optimize and can gain accuracy from considerably increased depth on image recognition benchmarks. "
 "An ensemble of residual nets with up to one hundred and fifty layers achieves a very low error on the ImageNet test set and won several tracks of the recognition competition."),
("kingma14", "Adam: A Method for Stochastic Optimization", "ICLR", 2015,
 "We introduce Adam, an algorithm for first-order gradient-based optimization of stochastic objective functions that is based on adaptive estimates of lower-order moments of the gradients. "
 "The method is straightforward to implement, is computationally efficient, has little memory requirements, and is invariant to diagonal rescaling of the gradients during training. "
 "It is well suited for problems that are large in terms of data or parameters and is also appropriate for non-stationary objectives and problems with very noisy or sparse gradients. "
 "We analyze the theoretical convergence properties of the algorithm and provide a regret bound on the convergence rate that is comparable to the best known results for online convex optimization."),
("goodfellow14", "Generative Adversarial Nets", "NeurIPS", 2014,
 "We propose a new framework for estimating generative models via an adversarial process in which two models are trained simultaneously against each other. "
 "A generative model captures the data distribution while a discriminative model estimates the probability that a sample came from the training data rather than from the generative model. "
 "The training procedure for the generative model is to maximize the probability of the discriminative model making a mistake, which corresponds to a minimax two-player game. "
 "In the case where both nets are defined by multilayer perceptrons, the entire system can be trained with backpropagation and there is no need for Markov chains or approximate inference networks during training or generation."),
("mikolov13", "Distributed Representations of Words and Phrases and their Compositionality", "NeurIPS", 2013,
 "The recently introduced continuous skip-gram model is an efficient method for learning high-quality distributed vector representations that capture a large number of precise syntactic and semantic word relationships. "
 "In this paper we present several extensions that improve both the quality of the vectors and the training speed, including subsampling of frequent words and a simple alternative to the hierarchical softmax called negative sampling. "
 "An inherent limitation of word representations is their indifference to word order and their inability to represent idiomatic phrases whose meaning is not a simple composition of the individual words. "
 "Motivated by this example, we present a simple method for finding phrases in text and show that learning good vector representations for millions of phrases is possible and that vectors exhibit a useful additive compositionality."),
("devlin19", "BERT: Pre-training of Deep Bidirectional Transformers for Language Understanding", "NAACL", 2019,
 "We introduce a new language representation model which is designed to pre-train deep bidirectional representations from unlabeled text by jointly conditioning on both left and right context in all layers. "
 "As a result, the pre-trained representations can be fine-tuned with just one additional output layer to create state-of-the-art models for a wide range of language understanding tasks. "
 "The model is conceptually simple and empirically powerful, and it relies on a masked language modeling objective together with a next sentence prediction task during pre-training. "
 "It obtains new state-of-the-art results on eleven natural language processing tasks, including large improvements on the general language understanding benchmark and on question answering datasets."),
("mnih15", "Human-level Control through Deep Reinforcement Learning", "Nature", 2015,
 "The theory of reinforcement learning provides a normative account of how agents may optimize their control of an environment, but applying it to realistic problems requires deriving efficient representations from high-dimensional sensory inputs. "
 "Here we use recent advances in training deep neural networks to develop a novel artificial agent, termed a deep Q-network, that can learn successful policies directly from raw pixels using end-to-end reinforcement learning. "
 "We tested this agent on the challenging domain of classic Atari games and demonstrate that it receives only the pixels and the game score as inputs. "
 "The deep Q-network surpasses the performance of all previous algorithms and achieves a level comparable to that of a professional human games tester across a set of forty-nine games using the same algorithm, network architecture and hyperparameters."),
("silver16", "Mastering the Game of Go with Deep Neural Networks and Tree Search", "Nature", 2016,
 "The game of Go has long been viewed as the most challenging of classic games for artificial intelligence owing to its enormous search space and the difficulty of evaluating board positions and moves. "
 "Here we introduce a new approach to computer Go that uses value networks to evaluate board positions and policy networks to select moves during play. "
 "These deep neural networks are trained by a novel combination of supervised learning from human expert games and reinforcement learning from games of self-play against earlier versions of the program. "
 "We also introduce a new search algorithm that combines Monte Carlo simulation with value and policy networks, and using this search algorithm our program defeated the human European Go champion by five games to none."),
("schulman17", "Proximal Policy Optimization Algorithms", "arXiv", 2017,
 "We propose a new family of policy gradient methods for reinforcement learning which alternate between sampling data through interaction with the environment and optimizing a surrogate objective function using stochastic gradient ascent. "
 "Whereas standard policy gradient methods perform one gradient update per data sample, we propose a novel objective function that enables multiple epochs of minibatch updates on the same batch of experience. "
 "The new methods, which we call proximal policy optimization, have some of the benefits of trust region policy optimization but they are much simpler to implement, more general, and have better sample complexity. "
 "Our experiments test the algorithms on a collection of benchmark tasks, including simulated robotic locomotion and Atari game playing, and show that they outperform other online policy gradient methods on balance."),
("finn17", "Model-Agnostic Meta-Learning for Fast Adaptation of Deep Networks", "ICML", 2017,
 "We propose an algorithm for meta-learning that is model-agnostic, in the sense that it is compatible with any model trained with gradient descent and applicable to a variety of different learning problems. "
 "The goal of meta-learning is to train a model on a variety of learning tasks such that it can solve new learning tasks using only a small number of training samples. "
 "In our approach the parameters of the model are explicitly trained such that a small number of gradient steps with a small amount of training data from a new task will produce good generalization performance on that task. "
 "We demonstrate that this approach leads to state-of-the-art performance on few-shot image classification benchmarks, produces good results on few-shot regression, and accelerates fine-tuning for policy gradient reinforcement learning with neural network policies."),
("kipf17", "Semi-Supervised Classification with Graph Convolutional Networks", "ICLR", 2017,
 "We present a scalable approach for semi-supervised learning on graph-structured data that is based on an efficient variant of convolutional neural networks which operate directly on graphs. "
 "We motivate the choice of our convolutional architecture via a localized first-order approximation of spectral graph convolutions that keeps the computation efficient. "
 "Our model scales linearly in the number of graph edges and learns hidden layer representations that encode both the local graph structure and the features of the nodes. "
 "In a number of experiments on citation networks and on a knowledge graph dataset we demonstrate that our approach outperforms related methods by a significant margin on node classification tasks."),
("ronneberger15", "U-Net: Convolutional Networks for Biomedical Image Segmentation", "MICCAI", 2015,
 "There is large consent that successful training of deep networks requires many thousand annotated training samples, which are rarely available for biomedical image segmentation tasks. "
 "In this paper we present a network and training strategy that relies on the strong use of data augmentation to use the available annotated samples more efficiently. "
 "The architecture consists of a contracting path to capture context and a symmetric expanding path that enables precise localization of the structures in the image. "
 "We show that such a network can be trained end-to-end from very few images and outperforms the prior best method on a challenge for segmentation of neuronal structures in electron microscopic stacks."),
("ren15", "Faster R-CNN: Towards Real-Time Object Detection with Region Proposal Networks", "NeurIPS", 2015,
 "State-of-the-art object detection networks depend on region proposal algorithms to hypothesize object locations, and the computation of these proposals has become the bottleneck of the whole detection pipeline. "
 "In this work we introduce a region proposal network that shares full-image convolutional features with the detection network, thus enabling nearly cost-free region proposals. "
 "The region proposal network is a fully convolutional network that simultaneously predicts object bounds and objectness scores at each position and is trained end-to-end to generate high-quality proposals. "
 "We further merge the proposal network and the detector into a single network by sharing their convolutional features, which yields real-time object detection with state-of-the-art accuracy on standard benchmarks."),
("ho20", "Denoising Diffusion Probabilistic Models", "NeurIPS", 2020,
 "We present high quality image synthesis results using diffusion probabilistic models, a class of latent variable models inspired by considerations from nonequilibrium thermodynamics. "
 "Our best results are obtained by training on a weighted variational bound designed according to a novel connection between diffusion probabilistic models and denoising score matching with Langevin dynamics. "
 "The models naturally admit a progressive lossy decompression scheme that can be interpreted as a generalization of autoregressive decoding to sampling from a sequence of noisy images. "
 "On unconditional image generation benchmarks we obtain sample quality competitive with generative adversarial networks while providing a likelihood-based training objective that is stable and simple to optimize."),
("kingma13", "Auto-Encoding Variational Bayes", "ICLR", 2014,
 "How can we perform efficient inference and learning in directed probabilistic models in the presence of continuous latent variables with intractable posterior distributions and large datasets? "
 "We introduce a stochastic variational inference and learning algorithm that scales to large datasets and, under some mild differentiability conditions, even works in the intractable case. "
 "First, we show that a reparameterization of the variational lower bound yields a lower bound estimator that can be straightforwardly optimized using standard stochastic gradient methods. "
 "Second, we show that posterior inference can be made especially efficient by fitting an approximate inference model, also called a recognition model, to the intractable posterior using the proposed estimator."),
("ioffe15", "Batch Normalization: Accelerating Deep Network Training by Reducing Internal Covariate Shift", "ICML", 2015,
 "Training deep neural networks is complicated by the fact that the distribution of the inputs of each layer changes during training as the parameters of the previous layers change. "
 "This slows down the training by requiring lower learning rates and careful parameter initialization, and it makes it notoriously hard to train models with saturating nonlinearities. "
 "We refer to this phenomenon as internal covariate shift and address the problem by normalizing layer inputs, making normalization a part of the model architecture and performing it for each training mini-batch. "
 "Batch normalization allows us to use much higher learning rates and to be less careful about initialization, and applied to a state-of-the-art image classification model it achieves the same accuracy with far fewer training steps."),
("srivastava14", "Dropout: A Simple Way to Prevent Neural Networks from Overfitting", "JMLR", 2014,
 "Deep neural networks with a large number of parameters are very powerful machine learning systems, but overfitting is a serious problem in such networks when the training data is limited. "
 "Dropout is a technique for addressing this problem whose key idea is to randomly drop units along with their connections from the neural network during training. "
 "This prevents units from co-adapting too much, and during training dropout samples from an exponential number of different thinned networks that share their weights. "
 "We show that dropout improves the performance of neural networks on supervised learning tasks in vision, speech recognition, document classification and computational biology, obtaining state-of-the-art results on many benchmark data sets."),
("bahdanau15", "Neural Machine Translation by Jointly Learning to Align and Translate", "ICLR", 2015,
 "Neural machine translation is a recently proposed approach in which a single neural network is jointly tuned to maximize the translation performance on a bilingual corpus. "
 "The models proposed recently for neural machine translation often belong to a family of encoder-decoders that encode a source sentence into a fixed-length vector from which a decoder generates a translation. "
 "In this paper we conjecture that the use of a fixed-length vector is a bottleneck in improving the performance of this basic architecture, especially for long sentences. "
 "We propose to extend it by allowing a model to automatically search for parts of a source sentence that are relevant to predicting a target word, which lets the model jointly learn to align and translate."),
("sutskever14", "Sequence to Sequence Learning with Neural Networks", "NeurIPS", 2014,
 "Deep neural networks are powerful models that have achieved excellent performance on difficult learning tasks, but they cannot be used to map sequences to sequences of different lengths. "
 "In this paper we present a general end-to-end approach to sequence learning that makes minimal assumptions on the sequence structure and uses a multilayered long short-term memory network. "
 "One network maps the input sequence to a vector of a fixed dimensionality, and another deep network decodes the target sequence from that vector. "
 "Our main result is that on an English to French translation task the sequence learning model produces translations that approach the quality of a strong phrase-based statistical system, and reversing the source word order helps considerably."),
("blei03", "Latent Dirichlet Allocation", "JMLR", 2003,
 "We describe latent Dirichlet allocation, a generative probabilistic model for collections of discrete data such as text corpora in which each document is a mixture of latent topics. "
 "The model is a three-level hierarchical Bayesian model in which each item of a collection is modeled as a finite mixture over an underlying set of topics. "
 "Each topic is, in turn, modeled as an infinite mixture over an underlying set of topic probabilities, which provides an explicit representation of a document in the context of text modeling. "
 "We present efficient approximate inference techniques based on variational methods and an expectation maximization algorithm for empirical Bayes parameter estimation, and we report results in document modeling and text classification."),
("erkan04", "LexRank: Graph-based Lexical Centrality as Salience in Text Summarization", "JAIR", 2004,
 "We introduce a stochastic graph-based method for computing the relative importance of textual units for natural language processing tasks and test it on the problem of text summarization. "
 "Extractive summarization relies on the concept of sentence salience to identify the most important sentences in a document or set of documents. "
 "In our model a connectivity matrix based on intra-sentence cosine similarity is used as the adjacency matrix of the graph representation of sentences, and the salience of a sentence is computed from its eigenvector centrality. "
 "Our results on the document understanding conference data show that the degree-based methods, including the continuous version of lexical centrality, outperform both centroid-based methods and other systems participating in the evaluation in most cases."),
("mihalcea04", "TextRank: Bringing Order into Texts", "EMNLP", 2004,
 "In this paper we introduce a graph-based ranking model for text processing and show how this model can be successfully used in natural language applications. "
 "Graph-based ranking algorithms decide on the importance of a vertex within a graph by taking into account global information recursively computed from the entire graph rather than relying only on local vertex-specific information. "
 "We propose two innovative unsupervised methods for keyword and sentence extraction in which the text is represented as a graph whose vertices are words or sentences and whose edges encode their relations. "
 "The results obtained compare favorably with previously published results on established benchmarks, and the method requires neither deep linguistic knowledge nor domain-specific annotated corpora."),
("lin04", "ROUGE: A Package for Automatic Evaluation of Summaries", "ACL Workshop", 2004,
 "This paper introduces a package for automatic evaluation of summaries that includes measures to automatically determine the quality of a summary by comparing it to other ideal summaries created by humans. "
 "The measures count the number of overlapping units such as n-grams, word sequences, and word pairs between the computer-generated summary to be evaluated and the ideal summaries. "
 "We describe four different measures included in the package, namely n-gram co-occurrence, longest common subsequence, weighted longest common subsequence and skip-bigram co-occurrence statistics. "
 "We show that three of the measures correlate well with human judgments on document understanding conference data, which makes them practical substitutes for expensive manual evaluation of summaries."),
("papineni02", "BLEU: a Method for Automatic Evaluation of Machine Translation", "ACL", 2002,
 "Human evaluations of machine translation are extensive but expensive, can take months to finish, and involve human labor that cannot be reused when the translation system changes. "
 "We propose a method of automatic machine translation evaluation that is quick, inexpensive, language-independent, and correlates highly with human evaluation. "
 "The central idea is that the closer a machine translation is to a professional human translation, the better it is, which we measure with a weighted average of variable length phrase matches against reference translations. "
 "We combine modified n-gram precision with a brevity penalty and show that the resulting score distinguishes human from machine translations and ranks systems in agreement with human judges."),
("page99", "The PageRank Citation Ranking: Bringing Order to the Web", "Stanford Tech Report", 1999,
 "The importance of a web page is an inherently subjective matter which depends on the interests, knowledge and attitudes of the readers, but there is still much that can be said objectively about the relative importance of web pages. "
 "This paper describes a method for rating web pages objectively and mechanically, effectively measuring the human interest and attention devoted to them through the link structure of the web. "
 "We compare the ranking to an idealized random web surfer and show how to efficiently compute the ranking for a large number of pages using an iterative algorithm. "
 "We also show how to apply the ranking to search and to user navigation, and we discuss how the computation can be personalized by changing the distribution of the random jumps."),
("cortes95", "Support-Vector Networks", "Machine Learning", 1995,
 "The support-vector network is a new learning machine for two-group classification problems that conceptually implements the idea of mapping input vectors into a very high-dimension feature space. "
 "In this feature space a linear decision surface is constructed, and special properties of the decision surface ensure high generalization ability of the learning machine. "
 "The idea behind the support-vector network was previously implemented for the restricted case where the training data can be separated without errors, and here we extend this result to non-separable training data. "
 "High generalization ability of support-vector networks utilizing polynomial input transformations is demonstrated, and we compare the performance with various classical learning algorithms on an optical character recognition benchmark."),
("breiman01", "Random Forests", "Machine Learning", 2001,
 "Random forests are a combination of tree predictors such that each tree depends on the values of a random vector sampled independently and with the same distribution for all trees in the forest. "
 "The generalization error for forests converges almost surely to a limit as the number of trees in the forest becomes large, and it depends on the strength of the individual trees and the correlation between them. "
 "Using a random selection of features to split each node yields error rates that compare favorably to adaptive boosting but are more robust with respect to noise in the training data. "
 "Internal estimates monitor error, strength, and correlation, and these are used to show the response to increasing the number of features used in the splitting and to measure variable importance."),
("chen16", "XGBoost: A Scalable Tree Boosting System", "KDD", 2016,
 "Tree boosting is a highly effective and widely used machine learning method, and in this paper we describe a scalable end-to-end tree boosting system that is used widely by data scientists to achieve state-of-the-art results on many machine learning challenges. "
 "We propose a novel sparsity-aware algorithm for sparse data and a weighted quantile sketch for approximate tree learning that together make the system efficient on real-world datasets. "
 "More importantly, we provide insights on cache access patterns, data compression and sharding to build a scalable tree boosting system that runs on a single machine or on distributed clusters. "
 "By combining these insights the system scales beyond billions of examples while using far fewer resources than existing systems, which makes tree boosting practical for very large problems."),
("hart68", "A Formal Basis for the Heuristic Determination of Minimum Cost Paths", "IEEE Trans. SSC", 1968,
 "Although the problem of determining the minimum cost path through a graph arises naturally in a number of interesting applications, there has been no underlying theory to guide the development of efficient search procedures. "
 "Moreover, there is no adequate conceptual framework within which the various ad hoc search strategies proposed to date can be compared and their relative merits evaluated. "
 "This paper describes how heuristic information from the problem domain can be incorporated into a formal mathematical theory of graph searching and demonstrates an optimality property of a class of search strategies. "
 "We show that when the heuristic estimate never overestimates the remaining cost the resulting algorithm is admissible and expands no more nodes than any other admissible algorithm with the same information."),
("hoffmann01", "The FF Planning System: Fast Plan Generation Through Heuristic Search", "JAIR", 2001,
 "We describe and evaluate the algorithmic techniques that are used in the FF planning system, a domain-independent planner that showed very competitive performance at the planning systems competition. "
 "Like the earlier heuristic search planners, the system relies on forward state space search and uses a heuristic that estimates goal distances by ignoring the delete lists of all actions. "
 "Unlike those planners, the system does not assume facts to be independent and instead extracts an explicit relaxed solution using a graphplan-style algorithm, which yields more informative goal distance estimates. "
 "We introduce a novel local search strategy that combines hill-climbing with systematic search, and we show how helpful actions and goal orderings can be exploited to prune the search space effectively."),
("xu08", "SATzilla: Portfolio-based Algorithm Selection for SAT", "JAIR", 2008,
 "It has been widely observed that there is no single dominant solver for the propositional satisfiability problem, and different solvers perform best on different instances. "
 "Rather than following the traditional approach of choosing the best solver for a given class of instances, we advocate making this decision online on a per-instance basis. "
 "Building on previous work, we describe a per-instance solver portfolio for satisfiability that uses so-called empirical hardness models to choose among its constituent solvers. "
 "This paper describes the portfolio construction in detail and shows that it outperforms every one of its constituent solvers and won several medals in the international satisfiability competition."),
("moskewicz01", "Chaff: Engineering an Efficient SAT Solver", "DAC", 2001,
 "Boolean satisfiability is probably the most studied of combinatorial optimization and search problems, and significant effort has been devoted to providing practical solutions for applications in electronic design automation. "
 "Most solvers are based on the basic backtracking search procedure of Davis, Putnam, Logemann and Loveland and use conflict analysis to learn clauses during search. "
 "This paper describes the development of a new complete solver whose efficiency results from carefully engineering all aspects of the search, especially a particularly efficient implementation of Boolean constraint propagation. "
 "We also present a novel low overhead decision strategy, and experimental results show that the new solver achieves one to two orders of magnitude improvement on difficult satisfiability benchmarks compared with other solvers."),
("thrun99", "Monte Carlo Localization for Mobile Robots", "ICRA", 1999,
 "To navigate reliably in indoor environments, a mobile robot must know where it is, and localization is the problem of estimating the pose of the robot relative to a map of its environment. "
 "This paper presents a new algorithm for mobile robot localization that represents the robot's belief by a set of samples drawn according to the posterior distribution over robot poses. "
 "The algorithm uses a sampling-based representation, which enables it to represent multi-modal distributions and to globally localize a robot whose initial position is unknown. "
 "In comparison to grid-based methods, the sample-based approach reduces the amount of memory required and increases the accuracy of localization while running in real time on data from sonar and laser sensors."),
("montemerlo02", "FastSLAM: A Factored Solution to the Simultaneous Localization and Mapping Problem", "AAAI", 2002,
 "The ability to simultaneously localize a robot and accurately map its surroundings is considered by many to be a key prerequisite of truly autonomous robots. "
 "Most existing approaches to this problem have a computational complexity that grows quadratically with the number of landmarks in the map, which limits their application to sparse maps with only a few hundred features. "
 "This paper presents an algorithm that recursively estimates the full posterior distribution over robot pose and landmark locations by factoring the problem into a robot localization problem and a collection of landmark estimation problems. "
 "The algorithm scales logarithmically with the number of landmarks, and we demonstrate it on real-world data with up to fifty thousand landmarks, a problem that is beyond the reach of previous approaches."),
("grisetti07", "Improved Techniques for Grid Mapping with Rao-Blackwellized Particle Filters", "IEEE T-RO", 2007,
 "Recently, Rao-Blackwellized particle filters have been introduced as an effective means to solve the simultaneous localization and mapping problem, in which each particle carries an individual map of the environment. "
 "A key question is how to reduce the number of particles, because the computational cost and memory requirements grow with the number of particles that must be maintained. "
 "In this paper we present adaptive techniques for reducing this number in a particle filter for learning grid maps, including an approach to compute an accurate proposal distribution that takes into account the most recent observation. "
 "We further apply an adaptive resampling technique that maintains a reasonable variety of particles, and experiments show that the approach builds accurate grid maps of large environments with an order of magnitude fewer particles."),
("mur15", "ORB-SLAM: A Versatile and Accurate Monocular SLAM System", "IEEE T-RO", 2015,
 "This paper presents a feature-based monocular simultaneous localization and mapping system that operates in real time in small and large indoor and outdoor environments. "
 "The system is robust to severe motion clutter, allows wide baseline loop closing and relocalization, and includes full automatic initialization from the first frames of a sequence. "
 "Building on excellent algorithms of recent years, we designed from scratch a novel system that uses the same features for all tasks, including tracking, mapping, relocalization and loop closing. "
 "A survival of the fittest strategy that selects the points and keyframes of the reconstruction leads to excellent robustness and generates a compact and trackable map that only grows if the scene content changes."),
("brooks86", "A Robust Layered Control System for a Mobile Robot", "IEEE J. Robotics and Automation", 1986,
 "We describe a new architecture for controlling mobile robots in which layers of control system are built to let the robot operate at increasing levels of competence. "
 "Layers are made up of asynchronous modules that communicate over low-bandwidth channels, and each module is an instance of a fairly simple computational machine. "
 "Higher-level layers can subsume the roles of lower levels by suppressing their outputs, while lower levels continue to function as higher levels are added to the control system. "
 "The result is a robust and flexible robot control system that has been used to control a mobile robot wandering around unconstrained laboratory areas and computer machine rooms."),
("elfes89", "Using Occupancy Grids for Mobile Robot Perception and Navigation", "Computer", 1989,
 "An approach to robot perception and world modeling that uses a probabilistic tesselated representation of spatial information called the occupancy grid is reviewed in this article. "
 "The occupancy grid is a multi-dimensional random field that maintains stochastic estimates of the occupancy state of the cells in a spatial lattice. "
 "To construct a sensor-derived map of the robot's world, the cell state estimates are obtained by interpreting the incoming range readings using probabilistic sensor models and Bayesian estimation procedures. "
 "The use of occupancy grids for mapping and navigation is discussed, and results from mobile robot experiments with sonar and stereo vision sensors are presented to illustrate the approach."),
("fox97", "The Dynamic Window Approach to Collision Avoidance", "IEEE RAM", 1997,
 "This paper describes the dynamic window approach to reactive collision avoidance for mobile robots equipped with synchro-drives, which is derived directly from the dynamics of the robot. "
 "The approach is especially designed to deal with the constraints imposed by limited velocities and accelerations of the robot during fast motion in cluttered environments. "
 "Periodically, a short time interval is considered when computing the next steering command, and the search space is restricted to the velocities reachable within that interval and that allow the robot to stop safely. "
 "Among these velocities the combination of translational and rotational velocity is chosen by maximizing an objective function that trades off progress toward the goal, clearance from obstacles, and forward speed."),
("kavraki96", "Probabilistic Roadmaps for Path Planning in High-Dimensional Configuration Spaces", "IEEE T-RA", 1996,
 "A new motion planning method for robots in static workspaces is presented that proceeds in two phases, a learning phase and a query phase. "
 "In the learning phase a probabilistic roadmap is constructed and stored as a graph whose nodes correspond to collision-free configurations and whose edges correspond to feasible paths between these configurations. "
 "In the query phase any given start and goal configurations of the robot are connected to two nodes of the roadmap, and the roadmap is then searched for a path joining these two nodes. "
 "The method is general and easy to implement, and experiments with planar articulated robots with many degrees of freedom show that it solves difficult path planning problems in a fraction of a second after a relatively short learning phase."),
("thrun06", "Stanley: The Robot that Won the DARPA Grand Challenge", "JFR", 2006,
 "This article describes the robot vehicle developed for the desert grand challenge, a race in which autonomous vehicles had to traverse a long course through difficult off-road terrain without human intervention. "
 "The vehicle was developed for high-speed desert driving, and its software architecture relies heavily on state-of-the-art artificial intelligence technologies such as machine learning and probabilistic reasoning. "
 "This article describes the major components of the robot, including its perception system for terrain classification, its probabilistic localization, and its planning and control software. "
 "The robot completed the course in just under seven hours and won the challenge, and this article discusses the lessons learned from developing the vehicle and from the race itself."),
("ng00", "Algorithms for Inverse Reinforcement Learning", "ICML", 2000,
 "This paper addresses the problem of inverse reinforcement learning in Markov decision processes, that is, the problem of extracting a reward function given observed, optimal behaviour. "
 "Inverse reinforcement learning may be useful for apprenticeship learning to acquire skilled behaviour and for ascertaining the reward function being optimized by a natural system. "
 "We first characterize the set of all reward functions for which a given policy is optimal, and then derive three algorithms for inverse reinforcement learning that cover finite and large state spaces. "
 "The first two deal with the case where the entire policy is known, and the third handles the more realistic case in which the policy is known only through a finite set of observed trajectories."),
("kocsis06", "Bandit Based Monte-Carlo Planning", "ECML", 2006,
 "For large state-space Markovian decision problems Monte-Carlo planning is one of the few viable approaches to find near-optimal solutions in a reasonable amount of time. "
 "In this paper we introduce a new algorithm that applies bandit ideas to guide Monte-Carlo planning, selecting actions at each tree node as if solving an independent multi-armed bandit problem. "
 "In finite-horizon or discounted Markov decision problems the algorithm is shown to be consistent, and finite sample bounds are derived on the estimation error due to sampling. "
 "Experimental results show that in several domains the new algorithm significantly outperforms its alternatives, and the approach has since become the basis of strong computer programs for the game of Go."),
("pang02", "Thumbs up? Sentiment Classification using Machine Learning Techniques", "EMNLP", 2002,
 "We consider the problem of classifying documents not by topic but by overall sentiment, for example determining whether a movie review is positive or negative. "
 "Using movie reviews as data, we find that standard machine learning techniques definitively outperform human-produced baselines that rely on lists of indicator words. "
 "However, the three machine learning methods we employed, naive Bayes, maximum entropy classification, and support vector machines, do not perform as well on sentiment classification as on traditional topic-based categorization. "
 "We conclude by examining factors that make the sentiment classification problem more challenging, including the frequent use of contrast and the need to understand the whole document."),
("klein03", "Accurate Unlexicalized Parsing", "ACL", 2003,
 "We demonstrate that an unlexicalized probabilistic context-free grammar can parse much more accurately than previously shown by making use of simple, linguistically motivated state splits. "
 "These splits break down false independence assumptions latent in a vanilla treebank grammar, for example by annotating nodes with their parent category or with features of their heads. "
 "Indeed, the performance of our unlexicalized grammar is better than that of early lexicalized models and approaches the accuracy of the best lexicalized parsers available at the time. "
 "Unlexicalized grammars are also easier to interpret, reason about, and improve than the more complex lexicalized models, and the grammar representation is much more compact."),
("petrov06", "Learning Accurate, Compact, and Interpretable Tree Annotation", "ACL", 2006,
 "We present an automatic approach to tree annotation in which basic nonterminal symbols are alternately split and merged to maximize the likelihood of a training treebank. "
 "Starting with a simple x-bar grammar, we learn a new grammar whose nonterminals are subsymbols of the original nonterminals, and the splits are learned with the expectation maximization algorithm. "
 "In contrast with previous work, we are able to split various terminals to different degrees, as appropriate to the actual complexity in the data, and merging prevents the grammar from overfitting. "
 "Our grammars automatically learn the kinds of linguistic distinctions exhibited in previous work on manual tree annotation, and our best grammar gives a parsing accuracy that is higher than fully lexicalized systems."),
("marcus93", "Building a Large Annotated Corpus of English: The Penn Treebank", "Computational Linguistics", 1993,
 "There is a growing consensus that significant, rapid progress can be made in both text understanding and spoken language understanding by investigating those phenomena that occur most centrally in naturally occurring unconstrained materials. "
 "In this paper we review our experience with constructing one such large annotated corpus, a corpus consisting of over four million words of American English annotated with part-of-speech information. "
 "In addition, over half of the corpus has been annotated for skeletal syntactic structure, and we describe the annotation guidelines and the tagging and bracketing procedures used. "
 "We discuss the inter-annotator consistency we obtained and the productivity of the annotators, and we argue that the combination of automatic processing with manual correction makes large annotated corpora feasible."),
("lafferty01", "Conditional Random Fields: Probabilistic Models for Segmenting and Labeling Sequence Data", "ICML", 2001,
 "We present conditional random fields, a framework for building probabilistic models to segment and label sequence data such as natural language text or biological sequences. "
 "Conditional random fields offer several advantages over hidden Markov models and stochastic grammars, including the ability to relax strong independence assumptions made in those models. "
 "They also avoid a fundamental limitation of maximum entropy Markov models and other discriminative Markov models based on directed graphical models, which can be biased towards states with few successor states. "
 "We present iterative parameter estimation algorithms for conditional random fields and compare the performance of the resulting models to hidden Markov models and maximum entropy Markov models on synthetic and natural language data."),
("collobert11", "Natural Language Processing (Almost) from Scratch", "JMLR", 2011,
 "We propose a unified neural network architecture and learning algorithm that can be applied to various natural language processing tasks including part-of-speech tagging, chunking, named entity recognition, and semantic role labeling. "
 "This versatility is achieved by trying to avoid task-specific engineering and therefore disregarding a lot of prior knowledge that is usually built into systems for these tasks. "
 "Instead of exploiting man-made input features carefully optimized for each task, our system learns internal representations on the basis of vast amounts of mostly unlabeled training data. "
 "This work is then used as a basis for building a freely available tagging system with good performance and minimal computational requirements on a range of standard natural language processing benchmarks."),
("rajpurkar16", "SQuAD: 100,000+ Questions for Machine Comprehension of Text", "EMNLP", 2016,
 "We present a new reading comprehension dataset consisting of more than one hundred thousand questions posed by crowdworkers on a set of Wikipedia articles. "
 "The answer to each question is a segment of text from the corresponding reading passage, which means that systems must select the answer from all possible spans in the passage. "
 "We analyze the dataset to understand the types of reasoning required to answer the questions, leaning heavily on dependency and constituency trees of the questions and the passages. "
 "We build a strong logistic regression model that achieves a reasonable score, a significant improvement over a simple baseline, but human performance is much higher, indicating that the dataset presents a good challenge problem for future research."),
("see17", "Get To The Point: Summarization with Pointer-Generator Networks", "ACL", 2017,
 "Neural sequence-to-sequence models have provided a viable new approach for abstractive text summarization, meaning they are not restricted to simply selecting and rearranging passages from the original text. "
 "However, these models have two shortcomings: they are liable to reproduce factual details inaccurately, and they tend to repeat themselves in longer outputs. "
 "In this work we propose a novel architecture that augments the standard sequence-to-sequence attentional model with a hybrid pointer-generator network that can copy words from the source text via pointing. "
 "We additionally use coverage to keep track of what has been summarized, which discourages repetition, and we apply the model to a news summarization task where it outperforms the abstractive state of the art by a clear margin."),
("rush15", "A Neural Attention Model for Abstractive Sentence Summarization", "EMNLP", 2015,
 "Summarization based on text extraction is inherently limited, but generation-style abstractive methods have proven challenging to build because they must produce fluent and faithful output. "
 "In this work we propose a fully data-driven approach to abstractive sentence summarization that uses a local attention-based model to generate each word of the summary conditioned on the input sentence. "
 "While the model is structurally simple, it can easily be trained end-to-end and scales to a large amount of training data from news headline and article pairs. "
 "The model shows significant performance gains on the shared task of the document understanding conference compared with several strong baselines, including systems based on syntactic compression."),
("dorr03", "Hedge Trimmer: A Parse-and-Trim Approach to Headline Generation", "HLT-NAACL Workshop", 2003,
 "This paper presents a parse-and-trim approach to generating headlines for news stories by removing constituents from a parse tree of the first sentence until a length threshold has been reached. "
 "Linguistically motivated heuristics guide the choice of which constituents of a story should be preserved and which ones should be deleted, such as temporal expressions and relative clauses. "
 "Our focus is on headline generation for English newspaper texts, with an eye toward the production of document surrogates for cross-language information retrieval. "
 "We evaluate the approach with automatic metrics and with human judges and show that the trimmed headlines are more readable than headlines produced by a statistical generation system."),
("banko00", "Headline Generation Based on Statistical Translation", "ACL", 2000,
 "Extractive summarization techniques cannot generate document summaries shorter than a single sentence, something that is often required for headlines and for very short document surrogates. "
 "This paper presents an approach to summarization that can generate summaries shorter than a sentence by building statistical models for content selection and surface realization. "
 "The content selection model learns a translation model between a document and its summary, while the realization model uses a bigram language model to order the selected words. "
 "We present results on headline generation from newswire articles, showing that the approach can produce readable and informative headlines of various lengths from the document text."),
("hulth03", "Improved Automatic Keyword Extraction Given More Linguistic Knowledge", "EMNLP", 2003,
 "In this paper experiments on automatic extraction of keywords from abstracts using a supervised machine learning algorithm are discussed. "
 "The main point of this paper is that by adding linguistic knowledge to the representation, such as syntactic features, rather than relying only on statistics, a better result is obtained as measured by keywords previously assigned by professional indexers. "
 "In more detail, extracting noun phrase chunks gives a better precision than extracting n-grams, and by adding the part-of-speech tag assigned to the term as a feature a dramatic improvement of the results is obtained. "
 "We discuss the different approaches to selecting candidate terms and show how the assignment of part-of-speech patterns can be used to filter candidate keywords from scientific abstracts."),
("witten99", "KEA: Practical Automatic Keyphrase Extraction", "ACM DL", 1999,
 "Keyphrases provide semantic metadata that summarize and characterize documents, and they are useful for browsing, searching and clustering collections of scientific papers. "
 "This paper describes an algorithm for automatically extracting keyphrases from text that uses a naive Bayes learning scheme to build a model from training documents with exemplar keyphrases. "
 "The algorithm identifies candidate keyphrases using lexical methods, calculates feature values for each candidate, and uses the learned model to predict which candidates are good keyphrases. "
 "Using a large test corpus, we evaluate the effectiveness of the algorithm in terms of how many author-assigned keyphrases are correctly identified, and we show that its performance is good enough to be practically useful."),
("hochreiter97", "Long Short-Term Memory", "Neural Computation", 1997,
 "Learning to store information over extended time intervals by recurrent backpropagation takes a very long time, mostly because of insufficient, decaying error backflow through the network. "
 "We briefly review an analysis of this problem and then address it by introducing a novel, efficient, gradient-based method called long short-term memory. "
 "Truncating the gradient where this does not do harm, the new memory network can learn to bridge minimal time lags in excess of one thousand discrete time steps by enforcing constant error flow through constant error carousels within special units. "
 "Multiplicative gate units learn to open and close access to the constant error flow, and in comparisons with other recurrent network algorithms the new method leads to many more successful runs and learns much faster."),
("lecun98", "Gradient-Based Learning Applied to Document Recognition", "Proc. IEEE", 1998,
 "Multilayer neural networks trained with the backpropagation algorithm constitute the best example of a successful gradient-based learning technique for building complex decision surfaces. "
 "Given an appropriate network architecture, gradient-based learning algorithms can be used to synthesize a complex decision surface that can classify high-dimensional patterns such as handwritten characters with minimal preprocessing. "
 "This paper reviews various methods applied to handwritten character recognition and compares them on a standard handwritten digit recognition task, where convolutional neural networks are shown to outperform all other techniques. "
 "We also introduce graph transformer networks, which allow multi-module recognition systems to be trained globally using gradient-based methods, and we describe a commercial system for reading bank checks."),
("dempster77", "Maximum Likelihood from Incomplete Data via the EM Algorithm", "JRSS-B", 1977,
 "A broadly applicable algorithm for computing maximum likelihood estimates from incomplete data is presented at various levels of generality. "
 "Theory showing the monotone behaviour of the likelihood and the convergence of the algorithm is derived, and each iteration consists of an expectation step followed by a maximization step. "
 "Many examples are sketched, including missing value situations, applications to grouped, censored or truncated data, finite mixture models, variance component estimation, and iteratively reweighted least squares. "
 "The algorithm unifies a large number of apparently unrelated methods from the statistical literature and is easy to implement whenever the complete data problem has a simple solution."),
("lowe04", "Distinctive Image Features from Scale-Invariant Keypoints", "IJCV", 2004,
 "This paper presents a method for extracting distinctive invariant features from images that can be used to perform reliable matching between different views of an object or scene. "
 "The features are invariant to image scale and rotation, and are shown to provide robust matching across a substantial range of affine distortion, change in viewpoint, addition of noise, and change in illumination. "
 "The features are highly distinctive, in the sense that a single feature can be correctly matched with high probability against a large database of features from many images. "
 "This paper also describes an approach to using these features for object recognition that identifies clusters belonging to a single object by a Hough transform and verifies them through least-squares solutions for consistent pose parameters."),
("viola01", "Rapid Object Detection using a Boosted Cascade of Simple Features", "CVPR", 2001,
 "This paper describes a machine learning approach for visual object detection which is capable of processing images extremely rapidly while achieving high detection rates. "
 "The first contribution is a new image representation called the integral image, which allows the features used by our detector to be computed very quickly at any scale or location. "
 "The second is a learning algorithm based on adaptive boosting, which selects a small number of critical visual features from a larger set and yields extremely efficient classifiers. "
 "The third contribution is a method for combining increasingly more complex classifiers in a cascade, which allows background regions of the image to be quickly discarded while spending more computation on promising object-like regions."),
("fischler81", "Random Sample Consensus: A Paradigm for Model Fitting with Applications to Image Analysis and Automated Cartography", "CACM", 1981,
 "A new paradigm for fitting a model to experimental data is introduced which is capable of interpreting or smoothing data containing a significant percentage of gross errors. "
 "The method is well suited for applications in automated image analysis, where interpretation is based on the data provided by error-prone feature detectors. "
 "Rather than using as much of the data as possible to obtain an initial solution and then attempting to eliminate invalid data points, the method uses as small an initial data set as feasible and enlarges this set with consistent data when possible. "
 "A major portion of the paper describes the application of random sample consensus to the location determination problem, in which the camera position is determined from an image of landmarks with known locations."),
("mildenhall20", "NeRF: Representing Scenes as Neural Radiance Fields for View Synthesis", "ECCV", 2020,
 "We present a method that achieves state-of-the-art results for synthesizing novel views of complex scenes by optimizing an underlying continuous volumetric scene function using a sparse set of input views. "
 "Our algorithm represents a scene using a fully-connected deep network whose input is a single continuous five-dimensional coordinate and whose output is the volume density and view-dependent emitted radiance at that location. "
 "We synthesize views by querying coordinates along camera rays and use classic volume rendering techniques to project the output colors and densities into an image. "
 "Because volume rendering is naturally differentiable, the only input required to optimize our representation is a set of images with known camera poses, and we describe how to effectively optimize neural radiance fields to render photorealistic novel views."),
("qi17", "PointNet: Deep Learning on Point Sets for 3D Classification and Segmentation", "CVPR", 2017,
 "Point cloud is an important type of geometric data structure, but due to its irregular format most researchers transform such data to regular three-dimensional voxel grids or collections of images. "
 "This, however, renders data unnecessarily voluminous and causes issues, so in this paper we design a novel type of neural network that directly consumes point clouds and respects the permutation invariance of points in the input. "
 "Our network provides a unified architecture for applications ranging from object classification and part segmentation to scene semantic parsing. "
 "Though simple, the network is highly efficient and effective, and empirically it shows strong performance on par with or even better than state of the art, while we also provide theoretical analysis of what the network has learnt and why it is robust."),
("chen20", "A Simple Framework for Contrastive Learning of Visual Representations", "ICML", 2020,
 "This paper presents a simple framework for contrastive learning of visual representations that does not require specialized architectures or a memory bank. "
 "In order to understand what enables the contrastive prediction tasks to learn useful representations, we systematically study the major components of our framework. "
 "We show that the composition of data augmentations plays a critical role in defining effective predictive tasks, and that introducing a learnable nonlinear transformation between the representation and the contrastive loss substantially improves the quality of the learned representations. "
 "By combining these findings we are able to considerably outperform previous methods for self-supervised and semi-supervised learning on the ImageNet benchmark with a linear classifier trained on the learned representations."),
("kirkpatrick17", "Overcoming Catastrophic Forgetting in Neural Networks", "PNAS", 2017,
 "The ability to learn tasks in a sequential fashion is crucial to the development of artificial intelligence, yet neural networks are generally not capable of this and suffer from catastrophic forgetting. "
 "Catastrophic forgetting occurs when a network trained on one task is subsequently trained on a second task and the knowledge of the first task is abruptly lost. "
 "We show that it is possible to overcome this limitation and train networks that can maintain expertise on tasks that they have not experienced for a long time by selectively slowing down learning on the weights important for previous tasks. "
 "We demonstrate our approach is scalable and effective by solving a set of classification tasks based on a handwritten digit dataset and by learning several Atari games sequentially."),
("mcmahan17", "Communication-Efficient Learning of Deep Networks from Decentralized Data", "AISTATS", 2017,
 "Modern mobile devices have access to a wealth of data suitable for learning models, which in turn can greatly improve the user experience on the device, but this rich data is often privacy sensitive or large in quantity. "
 "We advocate an alternative that leaves the training data distributed on the mobile devices and learns a shared model by aggregating locally computed updates, a setting we term federated learning. "
 "We present a practical method for the federated learning of deep networks based on iterative model averaging and conduct an extensive empirical evaluation considering five different model architectures and four datasets. "
 "These experiments demonstrate the approach is robust to the unbalanced and non-independent data distributions that are a defining characteristic of this setting, and communication costs are reduced by one to two orders of magnitude."),
("hardt16", "Equality of Opportunity in Supervised Learning", "NeurIPS", 2016,
 "We propose a criterion for discrimination against a specified sensitive attribute in supervised learning, where the goal is to predict some target based on available features. "
 "Assuming data about the predictor, target, and membership in the protected group are available, we show how to optimally adjust any learned predictor so as to remove discrimination according to our definition. "
 "Our framework also improves incentives by shifting the cost of poor classification from disadvantaged groups to the decision maker, who can respond by improving the classification accuracy. "
 "In line with other studies, our notion is oblivious to the functional form of the predictor, and we illustrate the notion using a case study of credit scores to show how the criterion can be achieved in practice."),
("koren09", "Matrix Factorization Techniques for Recommender Systems", "Computer", 2009,
 "As the well-known movie recommendation competition has demonstrated, matrix factorization models are superior to classic nearest-neighbor techniques for producing product recommendations. "
 "These models allow the incorporation of additional information such as implicit feedback, temporal effects, and confidence levels into the factorization of the user item rating matrix. "
 "We describe how latent factor models map both users and items to a joint latent factor space of a fixed dimensionality, such that user item interactions are modeled as inner products in that space. "
 "We explain learning algorithms based on stochastic gradient descent and alternating least squares, and we show how biases and temporal dynamics improve the accuracy of the resulting recommender systems."),
("hutter11", "Sequential Model-Based Optimization for General Algorithm Configuration", "LION", 2011,
 "State-of-the-art algorithms for hard computational problems often expose many parameters that can be modified to improve empirical performance, and manually exploring the resulting combinatorial space of parameter settings is tedious. "
 "Sequential model-based optimization is a promising approach for automating this process, but existing methods are restricted to numerical parameters and to optimizing performance on single instances. "
 "In this work we extend this paradigm for the first time to general algorithm configuration problems, allowing many categorical parameters and optimization for sets of instances. "
 "We experimentally validate our new algorithm configuration procedure by optimizing a local search and a tree search solver for the propositional satisfiability problem, as well as a commercial mixed integer programming solver."),
("abbeel04", "Apprenticeship Learning via Inverse Reinforcement Learning", "ICML", 2004,
 "We consider learning in a Markov decision process where we are not explicitly given a reward function, but where instead we can observe an expert demonstrating the task that we want to learn to perform. "
 "This setting is useful in applications such as the task of driving, where it may be difficult to write down an explicit reward function specifying exactly how different desiderata should be traded off. "
 "We think of the expert as trying to maximize a reward function that is expressible as a linear combination of known features, and give an algorithm for learning the task demonstrated by the expert. "
 "Our algorithm is based on using inverse reinforcement learning to try to recover the unknown reward function, and we show that it terminates in a small number of iterations and finds a policy that performs comparably to the expert."),
]

for rid, title, venue, year, abstract in RECORDS:
    print(json.dumps({"id": rid, "title": title, "abstract": abstract,
                      "venue": venue, "year": year}, ensure_ascii=False))
